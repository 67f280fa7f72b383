#include "coxfar/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxfar {

std::string Factor::symbol() const {
  std::ostringstream os;
  switch (family) {
    case Family::A: os << "A" << rank; break;
    case Family::B: os << "B" << rank; break;
    case Family::D: os << "D" << rank; break;
    case Family::E: os << "E" << rank; break;
    case Family::F: os << "F4"; break;
    case Family::H: os << "H" << rank; break;
    case Family::I2: os << (m == 6 ? "G2" : "I2(" + std::to_string(m) + ")"); break;
  }
  return os.str();
}

int CoxeterType::rank() const {
  int n = 0;
  for (const auto& f : factors) n += f.rank;
  return n;
}

std::string CoxeterType::symbol() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].symbol();
  }
  return s;
}

std::vector<std::pair<int, int>> CoxeterType::factor_spans() const {
  std::vector<std::pair<int, int>> spans;
  int off = 0;
  for (const auto& f : factors) {
    spans.emplace_back(off, off + f.rank);
    off += f.rank;
  }
  return spans;
}

namespace {

[[noreturn]] void parse_fail(const std::string& sym, size_t pos,
                             const std::string& what) {
  throw std::invalid_argument("parse error in type symbol \"" + sym +
                              "\" at position " + std::to_string(pos) + ": " +
                              what);
}

Factor parse_factor(const std::string& sym, size_t& i) {
  size_t start = i;
  if (i >= sym.size()) parse_fail(sym, i, "expected a factor");
  char fam = sym[i++];
  if (fam == 'I') {
    if (i + 1 >= sym.size() || sym[i] != '2' || sym[i + 1] != '(')
      parse_fail(sym, i, "expected I2(m)");
    i += 2;
    size_t j = i;
    while (j < sym.size() && std::isdigit(static_cast<unsigned char>(sym[j]))) ++j;
    if (j == i || j >= sym.size() || sym[j] != ')')
      parse_fail(sym, i, "expected integer label and ')'");
    int m = std::stoi(sym.substr(i, j - i));
    i = j + 1;
    if (m == 2) parse_fail(sym, start, "I2(2) is A1xA1; use the canonical symbol");
    if (m == 3) parse_fail(sym, start, "I2(3) is A2; use the canonical symbol");
    if (m == 4) parse_fail(sym, start, "I2(4) is B2; use the canonical symbol");
    if (m == 6) parse_fail(sym, start, "I2(6) is G2; use the canonical symbol");
    if (m < 2) parse_fail(sym, start, "invalid dihedral label");
    if (m > 1000) parse_fail(sym, start, "dihedral label out of range");
    return Factor{Family::I2, 2, m};
  }
  if (fam == 'G') {
    if (i >= sym.size() || sym[i] != '2') parse_fail(sym, i, "expected G2");
    ++i;
    return Factor{Family::I2, 2, 6};
  }
  size_t j = i;
  while (j < sym.size() && std::isdigit(static_cast<unsigned char>(sym[j]))) ++j;
  if (j == i) parse_fail(sym, i, "expected a rank");
  int n = std::stoi(sym.substr(i, j - i));
  i = j;
  switch (fam) {
    case 'A':
      if (n < 1 || n > 16) parse_fail(sym, start, "A_n requires 1 <= n <= 16");
      return Factor{Family::A, n, 0};
    case 'B':
      if (n < 2 || n > 16) parse_fail(sym, start, "B_n requires 2 <= n <= 16");
      return Factor{Family::B, n, 0};
    case 'D':
      if (n < 4 || n > 16) parse_fail(sym, start, "D_n requires 4 <= n <= 16");
      return Factor{Family::D, n, 0};
    case 'E':
      if (n < 6 || n > 8) parse_fail(sym, start, "E_n requires n in {6,7,8}");
      return Factor{Family::E, n, 0};
    case 'F':
      if (n != 4) parse_fail(sym, start, "only F4 exists");
      return Factor{Family::F, 4, 0};
    case 'H':
      if (n != 3 && n != 4) parse_fail(sym, start, "H_n requires n in {3,4}");
      return Factor{Family::H, n, 0};
    default:
      parse_fail(sym, start, "unknown family letter");
  }
}

}  // namespace

CoxeterType parse_type(const std::string& symbol) {
  CoxeterType t;
  size_t i = 0;
  t.factors.push_back(parse_factor(symbol, i));
  while (i < symbol.size()) {
    if (symbol[i] != 'x') parse_fail(symbol, i, "expected 'x' between factors");
    ++i;
    t.factors.push_back(parse_factor(symbol, i));
  }
  if (t.rank() > 16) parse_fail(symbol, 0, "total rank out of range");
  return t;
}

Eigen::MatrixXi coxeter_matrix(const CoxeterType& t) {
  int n = t.rank();
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(n, n, 2);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  auto edge = [&](int a, int b, int label) {
    m(a, b) = label;
    m(b, a) = label;
  };
  int off = 0;
  for (const Factor& f : t.factors) {
    switch (f.family) {
      case Family::A:
        for (int i = 0; i + 1 < f.rank; ++i) edge(off + i, off + i + 1, 3);
        break;
      case Family::B:
        for (int i = 0; i + 2 < f.rank; ++i) edge(off + i, off + i + 1, 3);
        edge(off + f.rank - 2, off + f.rank - 1, 4);
        break;
      case Family::D:
        for (int i = 0; i + 3 < f.rank; ++i) edge(off + i, off + i + 1, 3);
        edge(off + f.rank - 3, off + f.rank - 2, 3);
        edge(off + f.rank - 3, off + f.rank - 1, 3);
        break;
      case Family::E:
        // Nodes 1,3,4,5,...,rank form a chain; node 2 hangs off node 4.
        edge(off + 0, off + 2, 3);
        edge(off + 1, off + 3, 3);
        for (int i = 2; i + 1 < f.rank; ++i) edge(off + i, off + i + 1, 3);
        break;
      case Family::F:
        edge(off + 0, off + 1, 3);
        edge(off + 1, off + 2, 4);
        edge(off + 2, off + 3, 3);
        break;
      case Family::H:
        edge(off + 0, off + 1, 5);
        for (int i = 1; i + 1 < f.rank; ++i) edge(off + i, off + i + 1, 3);
        break;
      case Family::I2:
        edge(off + 0, off + 1, f.m);
        break;
    }
    off += f.rank;
  }
  return m;
}

GroupElement GroupElement::identity(int num_roots) {
  GroupElement e;
  e.img.resize(num_roots);
  for (int i = 0; i < num_roots; ++i) e.img[i] = i + 1;
  return e;
}

bool GroupElement::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int32_t>(i) + 1) return false;
  return true;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement c;
  c.img.resize(a.img.size());
  for (size_t i = 0; i < b.img.size(); ++i) {
    int32_t v = b.img[i];
    int j = v > 0 ? v - 1 : -v - 1;
    int32_t w = a.img[j];
    c.img[i] = v > 0 ? w : -w;
  }
  return c;
}

GroupElement GroupElement::inverse() const {
  GroupElement r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    int32_t v = img[i];
    int j = v > 0 ? v - 1 : -v - 1;
    r.img[j] = v > 0 ? static_cast<int32_t>(i) + 1 : -(static_cast<int32_t>(i) + 1);
  }
  return r;
}

std::vector<Rational> RootSystem::key_of(const FieldVector& v) const {
  std::vector<Rational> key;
  for (int i = 0; i < v.size(); ++i) {
    AlgebraicNumber x = v(i);
    if (field_ && !x.field()) {
      // Promote constants so keys are comparable.
      std::vector<Rational> zeros(field_->degree(), Rational(0));
      x = x + AlgebraicNumber::from_coeffs(field_, std::move(zeros));
    }
    for (const auto& c : x.coeffs()) key.push_back(c);
  }
  return key;
}

RootSystem::RootSystem(const CoxeterType& t) : type_(t), rank_(t.rank()) {
  degrees_ = degree_table(t);
  Eigen::MatrixXi cm = coxeter_matrix(t);

  // One composite field per group: theta_M with M the lcm of the edge labels
  // whose cosine is irrational; cos(pi/m) for m | M via Chebyshev identities.
  long long M = 1;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (cm(i, j) > 3) M = std::lcm(M, static_cast<long long>(cm(i, j)));
  field_ = (M > 1) ? NumberField::of(static_cast<int>(M)) : nullptr;

  gram_ = FieldMatrix(rank_, rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (i == j) gram_(i, j) = AlgebraicNumber(1);
      else gram_(i, j) = -cos_pi_over(cm(i, j), field_);
    }
  }

  // Breadth-first closure of the simple roots under simple reflections,
  // keeping positive representatives; deterministic order (level by level,
  // ties by lexicographic coordinate order).
  auto reflect_simple = [&](int s, const FieldVector& v) {
    AlgebraicNumber c(0);
    for (int j = 0; j < rank_; ++j) c += gram_(s, j) * v(j);
    FieldVector w = v;
    w(s) = w(s) - AlgebraicNumber(2) * c;
    return w;
  };
  auto vec_value_less = [](const FieldVector& a, const FieldVector& b) {
    for (int i = 0; i < a.size(); ++i) {
      int s = (a(i) - b(i)).sign();
      if (s != 0) return s < 0;
    }
    return false;
  };

  std::vector<FieldVector> level;
  for (int s = 0; s < rank_; ++s) {
    FieldVector e = FieldVector::Constant(rank_, AlgebraicNumber(0));
    e(s) = AlgebraicNumber(1);
    roots_.push_back(e);
    root_index_[key_of(e)] = s;
    level.push_back(e);
  }
  while (!level.empty()) {
    std::vector<FieldVector> next;
    for (const FieldVector& v : level) {
      for (int s = 0; s < rank_; ++s) {
        FieldVector w = reflect_simple(s, v);
        // Negative image only happens for v = alpha_s itself.
        int first_sign = 0;
        for (int i = 0; i < rank_ && first_sign == 0; ++i) first_sign = w(i).sign();
        if (first_sign < 0) continue;
        auto key = key_of(w);
        if (root_index_.count(key)) continue;
        root_index_[key] = -1;  // reserve; final index assigned after sorting
        next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end(), vec_value_less);
    for (FieldVector& w : next) {
      root_index_[key_of(w)] = static_cast<int>(roots_.size());
      roots_.push_back(w);
    }
    if (static_cast<int>(roots_.size()) > degrees_.num_reflections)
      throw std::logic_error("root generation exceeded the classical count");
    level = std::move(next);
  }
  if (static_cast<int>(roots_.size()) != degrees_.num_reflections)
    throw std::logic_error("root generation terminated with the wrong count");

  // Simple reflections as signed permutations.
  for (int s = 0; s < rank_; ++s) {
    GroupElement g;
    g.img.resize(roots_.size());
    for (size_t i = 0; i < roots_.size(); ++i) {
      if (static_cast<int>(i) == s) {
        g.img[i] = -(s + 1);
        continue;
      }
      FieldVector w = reflect_simple(s, roots_[i]);
      auto it = root_index_.find(key_of(w));
      if (it == root_index_.end()) throw std::logic_error("root system not closed");
      g.img[i] = it->second + 1;
    }
    simple_.push_back(std::move(g));
  }

  support_.resize(roots_.size());
  for (size_t i = 0; i < roots_.size(); ++i) {
    uint32_t mask = 0;
    for (int j = 0; j < rank_; ++j)
      if (!roots_[i](j).is_zero()) mask |= (1u << j);
    support_[i] = mask;
  }
}

AlgebraicNumber RootSystem::form(const FieldVector& u, const FieldVector& v) const {
  AlgebraicNumber r(0);
  for (int i = 0; i < rank_; ++i) {
    if (u(i).is_zero()) continue;
    AlgebraicNumber row(0);
    for (int j = 0; j < rank_; ++j) {
      if (v(j).is_zero()) continue;
      row += gram_(i, j) * v(j);
    }
    r += u(i) * row;
  }
  return r;
}

AlgebraicNumber RootSystem::form(int i, const FieldVector& v) const {
  return form(roots_[i], v);
}

std::optional<std::pair<int, int>> RootSystem::find_root(const FieldVector& v) const {
  auto it = root_index_.find(key_of(v));
  if (it != root_index_.end()) return std::make_pair(it->second, +1);
  FieldVector neg = v;
  for (int i = 0; i < neg.size(); ++i) neg(i) = -neg(i);
  it = root_index_.find(key_of(neg));
  if (it != root_index_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

GroupElement RootSystem::reflection_element(int r) const {
  if (r < 0 || r >= num_roots()) throw std::out_of_range("root index out of range");
  GroupElement g;
  g.img.resize(roots_.size());
  const FieldVector& beta = roots_[r];
  for (size_t i = 0; i < roots_.size(); ++i) {
    AlgebraicNumber c = form(static_cast<int>(r), roots_[i]);
    FieldVector w = roots_[i];
    for (int j = 0; j < rank_; ++j) w(j) = w(j) - AlgebraicNumber(2) * c * beta(j);
    auto hit = find_root(w);
    if (!hit) throw std::logic_error("reflection image is not a root");
    g.img[i] = hit->second > 0 ? hit->first + 1 : -(hit->first + 1);
  }
  return g;
}

std::vector<GroupElement> enumerate_group(const RootSystem& rs, long long limit) {
  const DegreeTable& dt = rs.degrees();
  if (dt.order > limit)
    throw std::runtime_error("group order " + std::to_string(dt.order) +
                             " exceeds enumeration limit " + std::to_string(limit));
  std::vector<GroupElement> elems;
  std::set<std::vector<int32_t>> seen;
  std::deque<GroupElement> queue;
  GroupElement id = GroupElement::identity(rs.num_roots());
  seen.insert(id.img);
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    GroupElement w = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < rs.rank(); ++s) {
      GroupElement ws = w * rs.simple_reflection(s);
      if (seen.insert(ws.img).second) {
        elems.push_back(ws);
        queue.push_back(std::move(ws));
      }
    }
  }
  if (static_cast<long long>(elems.size()) != dt.order)
    throw std::logic_error("group enumeration count disagrees with degree table");
  return elems;
}

ReflectionSubgroup reflection_subgroup(const RootSystem& rs,
                                       const std::vector<int>& roots) {
  std::set<int> closed(roots.begin(), roots.end());
  std::map<int, GroupElement> refl;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closed.begin(), closed.end());
    for (int r : cur) {
      auto it = refl.find(r);
      if (it == refl.end()) it = refl.emplace(r, rs.reflection_element(r)).first;
      for (int q : cur) {
        int img = it->second.apply(q).first;
        if (closed.insert(img).second) grew = true;
      }
    }
  }

  ReflectionSubgroup sub;
  sub.closed_roots.assign(closed.begin(), closed.end());

  RowSpan span(rs.rank());
  for (int r : sub.closed_roots) span.add(rs.root(r));
  sub.rank = span.rank();

  // Order by closure under the generating reflections; subgroups met here are
  // small parabolics, so plain enumeration is fine.
  std::vector<GroupElement> gens;
  for (int r : sub.closed_roots) gens.push_back(rs.reflection_element(r));
  std::set<std::vector<int32_t>> seen;
  std::deque<GroupElement> queue;
  GroupElement id = GroupElement::identity(rs.num_roots());
  seen.insert(id.img);
  queue.push_back(id);
  while (!queue.empty()) {
    GroupElement w = std::move(queue.front());
    queue.pop_front();
    for (const GroupElement& g : gens) {
      GroupElement wg = w * g;
      if (seen.insert(wg.img).second) queue.push_back(std::move(wg));
    }
  }
  sub.order = static_cast<long long>(seen.size());
  return sub;
}

}  // namespace coxfar
