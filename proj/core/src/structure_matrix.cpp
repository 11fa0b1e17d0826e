#include "lieindex/structure_matrix.hpp"

#include <algorithm>

#include "lieindex/errors.hpp"

namespace lieindex {

void LinearFormMatrix::set(std::size_t i, std::size_t j, SparseVector form) {
  if (i >= rows_.size() || j >= cols_) throw InvalidArgument("linear form matrix index out of range");
  if (form.empty()) return;
  for (const auto& [k, c] : form)
    if (k >= variables_) throw InvalidArgument("linear form references a missing variable");
  auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == j)
    it->form = std::move(form);
  else
    row.insert(it, Entry{j, std::move(form)});
}

SparseVector LinearFormMatrix::entry(std::size_t i, std::size_t j) const {
  const auto& row = rows_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == j) return it->form;
  return {};
}

bool LinearFormMatrix::is_skew_symmetric() const {
  if (rows() != cols_) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& e : rows_[i]) {
      if (e.col == i) return false;
      if (entry(e.col, i) != negated(e.form)) return false;
    }
  }
  return true;
}

Matrix<Fp> LinearFormMatrix::specialize(const std::vector<Fp>& point) const {
  if (point.size() != variables_) throw InvalidArgument("specialization point has wrong length");
  Matrix<Fp> m(rows(), cols_);
  const PrimeModulus p(point.empty() ? kDefaultPrime : point.front().modulus());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& e : rows_[i]) {
      Fp value;
      for (const auto& [k, c] : e.form) value += Fp::from_rational(c, p) * point[k];
      m(i, e.col) = value;
    }
  }
  return m;
}

Matrix<Rational> LinearFormMatrix::specialize(const Vector& point) const {
  if (point.size() != variables_) throw InvalidArgument("specialization point has wrong length");
  Matrix<Rational> m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& e : rows_[i]) {
      Rational value = 0;
      for (const auto& [k, c] : e.form) value += c * point[k];
      m(i, e.col) = value;
    }
  }
  return m;
}

Matrix<Polynomial> LinearFormMatrix::to_polynomials() const {
  Matrix<Polynomial> m(rows(), cols_, Polynomial(variables_));
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) m(i, e.col) = Polynomial::linear(variables_, e.form);
  return m;
}

StructureMatrix structure_matrix(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  StructureMatrix m(n, n, n);
  for (const auto& b : g.nonzero_brackets()) {
    m.set(b.i, b.j, b.coeffs);
    m.set(b.j, b.i, negated(b.coeffs));
  }
  return m;
}

LinearFormMatrix commutator_matrix(const LieAlgebra& g, const Subspace& h) {
  const std::size_t n = g.dim();
  LinearFormMatrix m(n, h.dim(), n);
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const SparseVector hj = to_sparse(h.basis()[j]);
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, g.bracket(SparseVector{{i, Rational(1)}}, hj));
  }
  return m;
}

std::size_t bareiss_rank(Matrix<Polynomial> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t variables = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) variables = std::max(variables, m(i, j).variables());
  Polynomial previous = Polynomial::constant(variables, Rational(1));
  bool previous_is_one = true;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    // Full pivoting, preferring the sparsest nonzero entry.
    std::size_t best_i = rows, best_j = cols, best_terms = 0;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        const std::size_t t = m(i, j).term_count();
        if (t != 0 && (best_i == rows || t < best_terms)) {
          best_i = i;
          best_j = j;
          best_terms = t;
        }
      }
    }
    if (best_i == rows) break;
    m.swap_rows(k, best_i);
    if (best_j != k)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, k), m(i, best_j));
    const Polynomial pivot = m(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial value = pivot * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = previous_is_one ? std::move(value) : Polynomial::exact_divide(value, previous);
      }
      m(i, k) = Polynomial(variables);
    }
    previous = pivot;
    previous_is_one = false;
  }
  return k;
}

}  // namespace lieindex
