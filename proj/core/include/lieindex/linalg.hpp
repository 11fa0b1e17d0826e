#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieindex/matrix.hpp"
#include "lieindex/rational.hpp"

namespace lieindex {

/// Rank by Gaussian elimination on exact scalars. The pivot in each column
/// is the first nonzero entry at or below the current row.
template <class S>
std::size_t rank(Matrix<S> m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    const S inv = inverse(m(r, col));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      const S factor = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

template <class S>
std::size_t rank(const SparseMatrix<S>& m) {
  return rank(m.to_dense());
}

/// Row space kept in reduced row-echelon form, built one vector at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  /// pivots()[r] is the leading column of rows()[r]; strictly increasing.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along pivot coordinates.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Inserts v; returns false if v was already in the span.
  bool insert(const Vector& v);

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon form of the row space of m (nonzero rows only).
EchelonBasis row_echelon(const Matrix<Rational>& m);

/// Basis of {v : m v = 0}; one vector per free column, with a 1 there.
std::vector<Vector> nullspace(const Matrix<Rational>& m);

/// Same, for a matrix given by its rows.
std::vector<Vector> nullspace_of_rows(const std::vector<Vector>& rows, std::size_t cols);

Vector multiply(const Matrix<Rational>& m, const Vector& v);

}  // namespace lieindex
