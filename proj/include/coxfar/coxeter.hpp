#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxfar/linalg.hpp"

namespace coxfar {

enum class Family { A, B, D, E, F, H, I2 };

struct Factor {
  Family family;
  int rank;  // for I2 always 2
  int m;     // dihedral label, only meaningful for I2

  std::string symbol() const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// A finite Coxeter type: a product of irreducible factors. Canonical symbols
// only ("B2" not "I2(4)", "G2" not "I2(6)").
struct CoxeterType {
  std::vector<Factor> factors;

  int rank() const;
  bool irreducible() const { return factors.size() == 1; }
  std::string symbol() const;
  // Index ranges of each factor's simple roots in the product numbering.
  std::vector<std::pair<int, int>> factor_spans() const;
};

// Throws std::invalid_argument with a position-bearing message on bad input.
CoxeterType parse_type(const std::string& symbol);

// Classical numerology, bundled as static data and cross-validated by tests.
struct DegreeTable {
  std::vector<int> degrees;    // increasing
  std::vector<int> exponents;  // d_i - 1
  int coxeter_number;          // largest degree
  long long order;             // product of degrees
  int num_reflections;         // sum of exponents ( = hn/2 for irreducibles)
};

DegreeTable degree_table(const CoxeterType& t);

// Coxeter matrix in the type's simple-root numbering (diagonal 1).
Eigen::MatrixXi coxeter_matrix(const CoxeterType& t);

// Element of W as a signed permutation of the positive roots:
// img[i] = +-(j+1) when w(beta_i) = +-beta_j.
struct GroupElement {
  std::vector<int32_t> img;

  static GroupElement identity(int num_roots);
  bool is_identity() const;
  // Composition as maps: (a*b)(beta) = a(b(beta)).
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  GroupElement inverse() const;
  // Image of root index i: pair (index, sign).
  std::pair<int, int> apply(int i) const {
    int32_t v = img[i];
    return v > 0 ? std::make_pair(v - 1, +1) : std::make_pair(-v - 1, -1);
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.img < b.img;
  }
};

// Positive roots of a finite Coxeter group in the simple-root basis, with the
// invariant bilinear form normalized so B(alpha_s, alpha_s) = 1. Generated by
// breadth-first closure of the simple roots, deterministically ordered.
class RootSystem {
 public:
  explicit RootSystem(const CoxeterType& t);

  const CoxeterType& type() const { return type_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const FieldPtr& field() const { return field_; }
  const FieldMatrix& gram() const { return gram_; }
  const FieldVector& root(int i) const { return roots_[i]; }
  const std::vector<FieldVector>& positive_roots() const { return roots_; }

  // B(root_i, v) for a vector v in the simple basis.
  AlgebraicNumber form(int i, const FieldVector& v) const;
  AlgebraicNumber form(const FieldVector& u, const FieldVector& v) const;

  // Index of +-v among positive roots, with the sign; nullopt if not a root.
  std::optional<std::pair<int, int>> find_root(const FieldVector& v) const;

  // Simple generator s as a signed permutation of positive roots.
  const GroupElement& simple_reflection(int s) const { return simple_[s]; }

  // Reflection in the hyperplane of positive root r.
  GroupElement reflection_element(int r) const;

  // Bitmask of simple indices with a nonzero coefficient in root i.
  uint32_t root_support(int i) const { return support_[i]; }

  const DegreeTable& degrees() const { return degrees_; }

 private:
  CoxeterType type_;
  int rank_;
  FieldPtr field_;
  FieldMatrix gram_;
  std::vector<FieldVector> roots_;
  std::map<std::vector<Rational>, int> root_index_;  // key: flattened coeffs
  std::vector<GroupElement> simple_;
  std::vector<uint32_t> support_;
  DegreeTable degrees_;

  std::vector<Rational> key_of(const FieldVector& v) const;
};

// All group elements by breadth-first closure under right multiplication by
// simple reflections (order: by length, then first-discovered word).
// Throws std::runtime_error naming |W| when it exceeds the limit.
std::vector<GroupElement> enumerate_group(const RootSystem& rs, long long limit);

struct ReflectionSubgroup {
  std::vector<int> closed_roots;  // saturated under mutual reflections
  long long order;
  int rank;
};

ReflectionSubgroup reflection_subgroup(const RootSystem& rs,
                                       const std::vector<int>& roots);

}  // namespace coxfar
