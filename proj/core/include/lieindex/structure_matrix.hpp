#pragma once

#include <cstddef>
#include <vector>

#include "lieindex/lie_algebra.hpp"
#include "lieindex/matrix.hpp"
#include "lieindex/polynomial.hpp"
#include "lieindex/prime_field.hpp"

namespace lieindex {

/// Matrix whose entries are linear forms sum_k c_k y_k in formal variables
/// y_0..y_{v-1}; stored as a coordinate list per row, without zero entries.
class LinearFormMatrix {
 public:
  struct Entry {
    std::size_t col;
    SparseVector form;
  };

  LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t variables)
      : cols_(cols), variables_(variables), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t variables() const { return variables_; }

  /// Appends entry (i, j); empty forms are dropped.
  void set(std::size_t i, std::size_t j, SparseVector form);
  /// Entry (i, j), or an empty form.
  SparseVector entry(std::size_t i, std::size_t j) const;
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

  bool is_skew_symmetric() const;

  Matrix<Fp> specialize(const std::vector<Fp>& point) const;
  Matrix<Rational> specialize(const Vector& point) const;
  Matrix<Polynomial> to_polynomials() const;

 private:
  std::size_t cols_;
  std::size_t variables_;
  std::vector<std::vector<Entry>> rows_;
};

/// M(g): entry (i, j) is [x_i, x_j] read as a linear form in y_0..y_{n-1}.
using StructureMatrix = LinearFormMatrix;

StructureMatrix structure_matrix(const LieAlgebra& g);

/// The rectangular matrix ([x_i, h_j]) for a basis h_j of a subspace.
LinearFormMatrix commutator_matrix(const LieAlgebra& g, const Subspace& h);

/// Rank of a polynomial matrix over the rational function field, by
/// fraction-free (Bareiss) elimination with full pivoting.
std::size_t bareiss_rank(Matrix<Polynomial> m);

}  // namespace lieindex
