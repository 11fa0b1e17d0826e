#include "lieindex/linalg.hpp"

#include <cassert>

namespace lieindex {

Vector EchelonBasis::reduce(Vector v) const {
  assert(v.size() == dim_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational coeff = v[pivots_[r]];
    if (is_zero(coeff)) continue;
    const Vector& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < dim_; ++j) {
      if (!is_zero(row[j])) v[j] -= coeff * row[j];
    }
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector w = reduce(v);
  std::size_t lead = 0;
  while (lead < dim_ && is_zero(w[lead])) ++lead;
  if (lead == dim_) return false;
  const Rational scale = inverse(w[lead]);
  for (std::size_t j = lead; j < dim_; ++j) w[j] *= scale;
  // Clear the new pivot column from existing rows to stay reduced.
  for (auto& row : rows_) {
    const Rational coeff = row[lead];
    if (is_zero(coeff)) continue;
    for (std::size_t j = lead; j < dim_; ++j) {
      if (!is_zero(w[j])) row[j] -= coeff * w[j];
    }
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  return true;
}

EchelonBasis row_echelon(const Matrix<Rational>& m) {
  EchelonBasis basis(m.cols());
  Vector row(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    if (!is_zero(row)) basis.insert(row);
  }
  return basis;
}

namespace {

std::vector<Vector> kernel_from_echelon(const EchelonBasis& basis) {
  const std::size_t n = basis.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : basis.pivots()) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < basis.size(); ++r) v[basis.pivots()[r]] = -basis.rows()[r][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix<Rational>& m) { return kernel_from_echelon(row_echelon(m)); }

std::vector<Vector> nullspace_of_rows(const std::vector<Vector>& rows, std::size_t cols) {
  EchelonBasis basis(cols);
  for (const auto& r : rows) {
    assert(r.size() == cols);
    if (!is_zero(r)) basis.insert(r);
  }
  return kernel_from_echelon(basis);
}

Vector multiply(const Matrix<Rational>& m, const Vector& v) {
  assert(v.size() == m.cols());
  Vector out = zero_vector(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j)) && !is_zero(v[j])) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace lieindex
