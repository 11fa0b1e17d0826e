#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lieindex/lie_algebra.hpp"
#include "lieindex/rational.hpp"

namespace lieindex {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<std::uint8_t>;

/// Graded lexicographic order, largest first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}
  static Polynomial constant(std::size_t variables, const Rational& c);
  /// sum_k coeffs_k * y_k
  static Polynomial linear(std::size_t variables, const SparseVector& coeffs);

  std::size_t variables() const { return variables_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::size_t degree() const;
  const Terms& terms() const { return terms_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// a / b when b divides a exactly; throws InternalInconsistency otherwise.
  static Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

  /// Value at a rational point.
  Rational evaluate(const Vector& point) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::size_t variables_ = 0;
  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace lieindex
