#include "coxfar/number_field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace coxfar {
namespace {

using Poly = std::vector<Rational>;  // increasing degree, no trailing zeros

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division, remainder must vanish.
Poly poly_divexact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (deg(a) >= deg(b) && !(a.size() == 1 && a[0] == 0)) {
    int k = deg(a) - deg(b);
    Rational c = a.back() / b.back();
    q[k] = c;
    for (int i = 0; i <= deg(b); ++i) a[i + k] -= c * b[i];
    trim(a);
    if (deg(a) < deg(b) || (a.size() == 1 && a[0] == 0)) break;
  }
  if (!(a.size() == 1 && a[0] == 0))
    throw std::logic_error("poly_divexact: nonzero remainder");
  trim(q);
  return q;
}

// Remainder of a mod b (b monic not required).
Poly poly_rem(Poly a, const Poly& b) {
  while (deg(a) >= deg(b)) {
    int k = deg(a) - deg(b);
    Rational c = a.back() / b.back();
    for (int i = 0; i <= deg(b); ++i) a[i + k] -= c * b[i];
    a.pop_back();
    trim(a);
    if (a.size() == 1 && a[0] == 0) break;
  }
  return a;
}

bool poly_is_zero(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Extended gcd: returns (g, u) with u*a == g  (mod b), g constant when a, b
// are coprime. Enough for inversion modulo an irreducible polynomial.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly b) {
  Poly u0{Rational(1)}, u1{Rational(0)};
  Poly r0 = std::move(a), r1 = std::move(b);
  while (!poly_is_zero(r1)) {
    // r0 = q r1 + r, with quotient accumulated step by step.
    Poly q(std::max<size_t>(1, r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1),
           Rational(0));
    Poly r = r0;
    while (deg(r) >= deg(r1) && !poly_is_zero(r)) {
      int k = deg(r) - deg(r1);
      Rational c = r.back() / r1.back();
      q[k] += c;
      for (int i = 0; i <= deg(r1); ++i) r[i + k] -= c * r1[i];
      trim(r);
    }
    trim(q);
    Poly u = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  return {r0, u0};
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// Cyclotomic polynomial Phi_n: x^n - 1 divided by Phi_d over proper divisors.
Poly cyclotomic_impl(int n, std::map<int, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divexact(num, cyclotomic_impl(d, cache));
  }
  cache[n] = num;
  return num;
}

Poly cyclotomic(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_impl(n, cache);
}

// V_k with V_k(x + 1/x) = x^k + x^-k: V_0 = 2, V_1 = y, V_k = y V_{k-1} - V_{k-2}.
Poly chebyshev_like(int k) {
  Poly v0{Rational(2)};
  Poly v1{Rational(0), Rational(1)};
  if (k == 0) return v0;
  if (k == 1) return v1;
  Poly y = v1;
  for (int i = 2; i <= k; ++i) {
    Poly v2 = poly_sub(poly_mul(y, v1), v0);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return v1;
}

Rational rational_from_double(double x, long denom = 1 << 20) {
  long num = std::lround(x * static_cast<double>(denom));
  Rational r(num, denom);
  r.canonicalize();
  return r;
}

}  // namespace

NumberField::NumberField(int m, std::vector<Rational> p, Rational lo, Rational hi)
    : m_(m), min_poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_at_lo_ = sgn(eval_min_poly(lo_));
  if (sign_at_lo_ == 0 || sgn(eval_min_poly(hi_)) == 0 ||
      sign_at_lo_ == sgn(eval_min_poly(hi_)))
    throw std::logic_error("isolating interval endpoints must straddle the root");
}

Rational NumberField::eval_min_poly(const Rational& x) const {
  return poly_eval(min_poly_, x);
}

std::shared_ptr<const NumberField> NumberField::of(int m) {
  static std::map<int, std::shared_ptr<const NumberField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  if (m < 2) throw std::invalid_argument("NumberField::of requires m >= 2");

  // Phi_2m(x) = x^d psi(x + 1/x); psi is the minimal polynomial of
  // theta_m = 2cos(pi/m) since theta_m = zeta + 1/zeta for a primitive
  // 2m-th root of unity zeta.
  Poly phi = cyclotomic(2 * m);
  int d2 = deg(phi);
  if (d2 % 2 != 0 && m > 2) throw std::logic_error("unexpected cyclotomic degree");
  int d = d2 / 2;
  Poly psi{phi[d]};
  for (int k = 1; k <= d; ++k) {
    Poly term = chebyshev_like(k);
    for (auto& c : term) c *= -phi[d + k];
    psi = poly_sub(psi, term);  // psi += phi[d+k] * V_k
  }
  trim(psi);
  if (psi.back() != 1) throw std::logic_error("halved cyclotomic is not monic");

  // theta_m is the largest real root; all conjugates are 2cos(k pi/m) for k
  // coprime to 2m. Their doubles pin down a safe rational isolating interval.
  // theta is the largest real root; the distinct conjugates are 2cos(k pi/m)
  // for 1 <= k < m coprime to 2m (k and 2m-k coincide).
  double theta = 2.0 * std::cos(M_PI / m);
  double nearest = -2.0;
  for (int k = 2; k < m; ++k) {
    if (std::gcd(k, 2 * m) != 1) continue;
    nearest = std::max(nearest, 2.0 * std::cos(k * M_PI / m));
  }
  double gap = (d >= 2) ? (theta - nearest) / 3.0 : 0.25;
  Rational lo = rational_from_double(theta - gap);
  Rational hi = rational_from_double(theta + gap);
  if (d == 1) {
    // Rational theta (m = 2 or 3): exact root, widen trivially around it.
    Rational root = -psi[0];
    lo = root - Rational(1, 4);
    hi = root + Rational(1, 4);
  }

  auto nf = std::shared_ptr<const NumberField>(new NumberField(m, psi, lo, hi));
  cache[m] = nf;
  return nf;
}

FieldPtr minimal_polynomial_2cos(int m) { return NumberField::of(m); }

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  if (field->degree() == 1) {
    // theta is rational: the root of the degree-1 minimal polynomial.
    c[0] = -field->minimal_polynomial()[0];
  } else {
    c[1] = 1;
  }
  return from_coeffs(field, std::move(c));
}

AlgebraicNumber AlgebraicNumber::from_coeffs(const FieldPtr& field,
                                             std::vector<Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) != field->degree())
    throw std::invalid_argument("coefficient count must match field degree");
  AlgebraicNumber x;
  x.field_ = field;
  x.coeff_ = std::move(coeffs);
  return x;
}

bool AlgebraicNumber::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool AlgebraicNumber::is_rational() const {
  for (size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  return coeff_[0];
}

void AlgebraicNumber::promote_to(const FieldPtr& field) {
  if (field_) {
    if (field_ != field)
      throw std::logic_error("mixing elements of distinct number fields");
    return;
  }
  Rational v = coeff_[0];
  coeff_.assign(field->degree(), Rational(0));
  coeff_[0] = v;
  field_ = field;
}

void AlgebraicNumber::align(AlgebraicNumber& a, AlgebraicNumber& b) {
  if (a.field_ == b.field_) return;
  if (!a.field_) a.promote_to(b.field_);
  else if (!b.field_) b.promote_to(a.field_);
  else throw std::logic_error("mixing elements of distinct number fields");
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  AlgebraicNumber rhs = o;
  align(*this, rhs);
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  AlgebraicNumber rhs = o;
  align(*this, rhs);
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  AlgebraicNumber rhs = o;
  align(*this, rhs);
  if (!field_) {
    coeff_[0] *= rhs.coeff_[0];
    return *this;
  }
  const Poly& mp = field_->minimal_polynomial();
  int d = field_->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (coeff_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (rhs.coeff_[j] == 0) continue;
      prod[i + j] += coeff_[i] * rhs.coeff_[j];
    }
  }
  // Reduce modulo the monic minimal polynomial.
  for (int i = 2 * d - 2; i >= d; --i) {
    if (prod[i] == 0) continue;
    Rational c = prod[i];
    prod[i] = 0;
    for (int j = 0; j < d; ++j) prod[i - d + j] -= c * mp[j];
  }
  coeff_.assign(prod.begin(), prod.begin() + d);
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  AlgebraicNumber rhs = o;
  align(*this, rhs);
  if (!field_) {
    coeff_[0] /= rhs.coeff_[0];
    return *this;
  }
  // Invert rhs modulo the minimal polynomial (irreducible, so coprime).
  Poly a(rhs.coeff_.begin(), rhs.coeff_.end());
  trim(a);
  auto [g, u] = poly_half_ext_gcd(a, field_->minimal_polynomial());
  if (deg(g) != 0 || g[0] == 0)
    throw std::logic_error("minimal polynomial is not coprime with element");
  for (auto& c : u) c /= g[0];
  Poly inv = poly_rem(std::move(u), field_->minimal_polynomial());
  inv.resize(field_->degree(), Rational(0));
  AlgebraicNumber rinv = from_coeffs(field_, std::move(inv));
  return *this *= rinv;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  AlgebraicNumber::align(x, y);
  return x.coeff_ == y.coeff_;
}

int AlgebraicNumber::rep_compare(const AlgebraicNumber& a,
                                 const AlgebraicNumber& b) {
  AlgebraicNumber x = a, y = b;
  align(x, y);
  for (size_t i = 0; i < x.coeff_.size(); ++i) {
    int c = cmp(x.coeff_[i], y.coeff_[i]);
    if (c != 0) return c;
  }
  return 0;
}

int AlgebraicNumber::sign() const {
  if (is_zero()) return 0;
  if (!field_ || is_rational()) return sgn(coeff_[0]);

  // Interval arithmetic on the isolating interval, refined by bisecting the
  // minimal-polynomial root until the evaluated interval excludes zero.
  Rational lo = field_->iso_lo();
  Rational hi = field_->iso_hi();
  const int sign_lo = field_->sign_at_lo();
  auto imul = [](const Rational& alo, const Rational& ahi, const Rational& blo,
                 const Rational& bhi, Rational& rlo, Rational& rhi) {
    Rational p1 = alo * blo, p2 = alo * bhi, p3 = ahi * blo, p4 = ahi * bhi;
    rlo = std::min(std::min(p1, p2), std::min(p3, p4));
    rhi = std::max(std::max(p1, p2), std::max(p3, p4));
  };
  while (true) {
    // Horner over the interval [lo, hi].
    Rational vlo(0), vhi(0);
    for (size_t i = coeff_.size(); i-- > 0;) {
      Rational mlo, mhi;
      imul(vlo, vhi, lo, hi, mlo, mhi);
      vlo = mlo + coeff_[i];
      vhi = mhi + coeff_[i];
    }
    if (sgn(vlo) > 0) return +1;
    if (sgn(vhi) < 0) return -1;
    Rational mid = (lo + hi) / 2;
    int sm = sgn(field_->eval_min_poly(mid));
    // Irreducible of degree >= 2 has no rational root.
    if (sm == 0) throw std::logic_error("rational root of irreducible minimal polynomial");
    if (sm == sign_lo) lo = mid;
    else hi = mid;
  }
}

double AlgebraicNumber::to_double() const {
  if (!field_) return coxfar::to_double(coeff_[0]);
  double theta = 2.0 * std::cos(M_PI / field_->label());
  double v = 0.0, p = 1.0;
  for (const auto& c : coeff_) {
    v += coxfar::to_double(c) * p;
    p *= theta;
  }
  return v;
}

std::string AlgebraicNumber::str() const {
  std::ostringstream os;
  if (!field_) {
    os << coeff_[0].get_str();
    return os.str();
  }
  os << "[";
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (i) os << ",";
    os << coeff_[i].get_str();
  }
  os << "]@" << field_->label();
  return os.str();
}

AlgebraicNumber cos_pi_over(int m, const FieldPtr& field) {
  if (m == 1) return AlgebraicNumber(Rational(-1));
  if (m == 2) return AlgebraicNumber(Rational(0));
  if (m == 3) return AlgebraicNumber(Rational(1, 2));
  if (!field || field->label() % m != 0)
    throw std::invalid_argument("cos(pi/m) not expressible in this field");
  // 2cos(k pi / M) = V_k(theta_M) with k = M/m.
  int k = field->label() / m;
  AlgebraicNumber theta = AlgebraicNumber::generator(field);
  AlgebraicNumber v0(2), v1 = theta;
  if (k == 0) throw std::logic_error("bad chebyshev index");
  AlgebraicNumber v = (k == 1) ? v1 : v0;
  for (int i = 2; i <= k; ++i) {
    AlgebraicNumber v2 = theta * v1 - v0;
    v0 = v1;
    v1 = v2;
  }
  if (k >= 1) v = v1;
  return v / AlgebraicNumber(2);
}

}  // namespace coxfar
