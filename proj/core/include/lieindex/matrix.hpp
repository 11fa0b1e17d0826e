#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "lieindex/prime_field.hpp"
#include "lieindex/rational.hpp"

namespace lieindex {

/// Dense row-major matrix over a scalar type S (Rational or Fp).
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const S& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const S& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Sparse matrix stored as a coordinate list per row; never holds explicit zeros.
template <class S>
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, S>;

  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Appends to row i. Zero values are dropped; columns must not repeat.
  void insert(std::size_t i, std::size_t j, S value) {
    assert(i < rows_.size() && j < cols_);
    if (is_zero(value)) return;
    rows_[i].emplace_back(j, std::move(value));
  }

  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

  std::size_t nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
  }

  Matrix<S> to_dense(const S& zero = S()) const {
    Matrix<S> m(rows(), cols_, zero);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [j, v] : rows_[i]) m(i, j) = v;
    return m;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

template <class S>
Matrix<S> transpose(const Matrix<S>& m) {
  Matrix<S> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace lieindex
