#pragma once

#include <Eigen/Core>
#include <vector>

#include "coxfar/number_field.hpp"

namespace coxfar {

using FieldMatrix =
    Eigen::Matrix<AlgebraicNumber, Eigen::Dynamic, Eigen::Dynamic>;
using FieldVector = Eigen::Matrix<AlgebraicNumber, Eigen::Dynamic, 1>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(FieldMatrix& m);

int rank(FieldMatrix m);

// Canonical basis of the right null space: for each free column a basis
// vector with entry 1 there and the negated RREF entries at pivot columns.
// Equal row spaces yield identical bases.
std::vector<FieldVector> kernel(const FieldMatrix& m);

// Incrementally maintained row space in echelon form, for repeated
// span-membership tests (flat saturation).
class RowSpan {
 public:
  explicit RowSpan(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  bool contains(const FieldVector& v) const;
  // Adds v to the span; returns true if the rank grew.
  bool add(FieldVector v);

  // Matrix whose rows span the space (echelon form).
  FieldMatrix as_matrix() const;

 private:
  FieldVector reduce(FieldVector v) const;

  int cols_;
  std::vector<FieldVector> rows_;  // each has a leading 1 at pivot_[i]
  std::vector<int> pivot_;
};

}  // namespace coxfar
