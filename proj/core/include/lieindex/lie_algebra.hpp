#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieindex/linalg.hpp"
#include "lieindex/rational.hpp"

namespace lieindex {

/// Sparse coordinate vector: (index, coefficient) pairs, sorted by index,
/// without zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);
SparseVector negated(SparseVector v);

/// Accumulates sparse contributions into a dense buffer, remembering which
/// coordinates were touched so it can be drained and reused cheaply.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::size_t n) : values_(n, Rational(0)), touched_(n, false) {}
  void add(std::size_t k, const Rational& c);
  void add(const SparseVector& v, const Rational& scale);
  /// Returns the sorted nonzero part and resets the accumulator.
  SparseVector take();

 private:
  std::vector<Rational> values_;
  std::vector<bool> touched_;
  std::vector<std::size_t> indices_;
};

/// One stored structure constant row: [x_i, x_j] = coeffs, with i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  SparseVector coeffs;
};

/// Finite-dimensional Lie algebra over Q, given by structure constants in a
/// labeled basis x_0..x_{n-1}. Only [x_i, x_j] with i < j is stored.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Entries with i > j are stored negated; i == j is rejected, as are
  /// duplicate pairs, out-of-range indices, and duplicate labels.
  LieAlgebra(std::vector<std::string> labels, std::vector<BracketEntry> brackets);

  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// [x_i, x_j] as a sparse vector (antisymmetry applied for i > j).
  SparseVector basis_bracket(std::size_t i, std::size_t j) const;
  /// Stored row for i < j; empty when the bracket vanishes.
  const SparseVector& upper_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// [x, y] for coordinate vectors; throws InvalidArgument on size mismatch.
  Vector bracket(const Vector& x, const Vector& y) const;
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  /// Nonzero stored brackets in (i, j) order.
  std::vector<BracketEntry> nonzero_brackets() const;

  /// Same labels and structure constants.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // n*n, only i < j populated
};

/// Subspace of Q^n with its basis kept in reduced row-echelon form, so two
/// subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : echelon_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  /// span(e_first, ..., e_{n-1})
  static Subspace coordinate_tail(std::size_t ambient_dim, std::size_t first);
  static Subspace coordinates(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return echelon_.ambient_dim(); }
  std::size_t dim() const { return echelon_.size(); }
  bool is_zero() const { return dim() == 0; }
  const std::vector<Vector>& basis() const { return echelon_.rows(); }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots(); }

  bool contains(const Vector& v) const { return echelon_.contains(v); }
  bool contains(const Subspace& other) const;
  /// Reduction of v modulo this subspace (zero on pivot coordinates).
  Vector reduce(const Vector& v) const { return echelon_.reduce(v); }
  /// Returns false if v was already contained.
  bool add(const Vector& v) { return echelon_.insert(v); }
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
  }

 private:
  EchelonBasis echelon_;
};

}  // namespace lieindex
