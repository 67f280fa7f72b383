#include "coxfar/linalg.hpp"

namespace coxfar {

std::vector<int> rref(FieldMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    AlgebraicNumber inv = AlgebraicNumber(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      AlgebraicNumber f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(FieldMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<FieldVector> kernel(const FieldMatrix& m) {
  FieldMatrix r = m;
  std::vector<int> pivots = rref(r);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FieldVector> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    FieldVector v = FieldVector::Constant(cols, AlgebraicNumber(0));
    v(c) = AlgebraicNumber(1);
    for (size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -r(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldVector RowSpan::reduce(FieldVector v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const AlgebraicNumber& c = v(pivot_[i]);
    if (c.is_zero()) continue;
    AlgebraicNumber f = c;
    for (int j = pivot_[i]; j < cols_; ++j) v(j) = v(j) - f * rows_[i](j);
  }
  return v;
}

bool RowSpan::contains(const FieldVector& v) const {
  FieldVector r = reduce(v);
  for (int j = 0; j < cols_; ++j)
    if (!r(j).is_zero()) return false;
  return true;
}

bool RowSpan::add(FieldVector v) {
  FieldVector r = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < cols_; ++j) {
    if (!r(j).is_zero()) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  AlgebraicNumber inv = AlgebraicNumber(1) / r(p);
  for (int j = p; j < cols_; ++j) r(j) = r(j) * inv;
  // Keep rows ordered by pivot column.
  size_t pos = 0;
  while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivot_.insert(pivot_.begin() + pos, p);
  return true;
}

FieldMatrix RowSpan::as_matrix() const {
  FieldMatrix m(rows_.size(), cols_);
  for (size_t i = 0; i < rows_.size(); ++i) m.row(static_cast<int>(i)) = rows_[i].transpose();
  return m;
}

}  // namespace coxfar
