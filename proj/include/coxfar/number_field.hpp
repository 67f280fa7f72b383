#pragma once

#include <Eigen/Core>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxfar/rational.hpp"

namespace coxfar {

// The real field Q(theta_m) with theta_m = 2cos(pi/m), identified by the
// minimal polynomial of theta_m over Q and a rational isolating interval
// around theta_m (it contains theta_m and no other root of the polynomial).
class NumberField {
 public:
  // Cached construction; one shared instance per label m.
  static std::shared_ptr<const NumberField> of(int m);

  int label() const { return m_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }

  // Monic, coefficients in increasing degree order.
  const std::vector<Rational>& minimal_polynomial() const { return min_poly_; }

  const Rational& iso_lo() const { return lo_; }
  const Rational& iso_hi() const { return hi_; }
  // Sign of the minimal polynomial at iso_lo (fixed during bisection).
  int sign_at_lo() const { return sign_at_lo_; }

  Rational eval_min_poly(const Rational& x) const;

 private:
  NumberField(int m, std::vector<Rational> p, Rational lo, Rational hi);

  int m_;
  std::vector<Rational> min_poly_;
  Rational lo_, hi_;
  int sign_at_lo_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Minimal polynomial of 2cos(pi/m) over Q, via cyclotomic halving: the monic
// polynomial psi with Phi_2m(x) = x^d psi(x + 1/x), d = deg(Phi_2m)/2.
FieldPtr minimal_polynomial_2cos(int m);

// Element of Q(theta_m) in the power basis 1, theta, ..., theta^{d-1}.
// A null field pointer denotes a plain rational constant; constants mix
// freely with elements of any one field. Canonical representation: equality
// is coefficient equality after promotion.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : coeff_(1, Rational(0)) {}
  AlgebraicNumber(int v) : coeff_(1, Rational(v)) {}            // NOLINT
  AlgebraicNumber(long v) : coeff_(1, Rational(v)) {}           // NOLINT
  AlgebraicNumber(const Rational& v) : coeff_(1, v) {}          // NOLINT

  static AlgebraicNumber generator(const FieldPtr& field);
  static AlgebraicNumber from_coeffs(const FieldPtr& field,
                                     std::vector<Rational> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  const Rational& rational_value() const;

  // Exact sign under the real embedding picked by the isolating interval.
  int sign() const;

  double to_double() const;
  std::string str() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o);

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) {
    a += b;
    return a;
  }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) {
    a -= b;
    return a;
  }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) {
    a *= b;
    return a;
  }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) {
    a /= b;
    return a;
  }

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return !(a == b);
  }
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return (a - b).sign() > 0;
  }
  friend bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return (a - b).sign() <= 0;
  }
  friend bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return (a - b).sign() >= 0;
  }

  // Cheap total order on representations (field label, then coefficients
  // lexicographically). Used for canonical map keys, not value comparison.
  static int rep_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  void promote_to(const FieldPtr& field);
  static void align(AlgebraicNumber& a, AlgebraicNumber& b);

  FieldPtr field_;
  std::vector<Rational> coeff_;
};

inline int sign(const AlgebraicNumber& x) { return x.sign(); }
inline AlgebraicNumber abs(const AlgebraicNumber& x) {
  return x.sign() < 0 ? -x : x;
}

// cos(pi/m) as an element of the given field; m must satisfy m | field label
// (or have a rational cosine: m in {1,2,3}).
AlgebraicNumber cos_pi_over(int m, const FieldPtr& field);

}  // namespace coxfar

namespace Eigen {

template <>
struct NumTraits<coxfar::AlgebraicNumber>
    : GenericNumTraits<coxfar::AlgebraicNumber> {
  using Real = coxfar::AlgebraicNumber;
  using NonInteger = coxfar::AlgebraicNumber;
  using Nested = coxfar::AlgebraicNumber;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 200,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
