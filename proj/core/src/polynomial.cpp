#include "lieindex/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "lieindex/errors.hpp"

namespace lieindex {
namespace {

std::size_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > m[k]) return false;
  return true;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const unsigned e = unsigned(a[k]) + b[k];
    if (e > 255) throw ResourceLimit("polynomial exponent overflow");
    out[k] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = static_cast<std::uint8_t>(a[k] - b[k]);
  return out;
}

}  // namespace

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

Polynomial Polynomial::linear(std::size_t variables, const SparseVector& coeffs) {
  Polynomial p(variables);
  for (const auto& [k, c] : coeffs) {
    if (k >= variables) throw InvalidArgument("linear form references a missing variable");
    Monomial m(variables, 0);
    m[k] = 1;
    p.add_term(m, c);
  }
  return p;
}

std::size_t Polynomial::degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (lieindex::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (lieindex::is_zero(it->second)) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a.variables_ >= b.variables_ ? a : b;
  const Polynomial& other = a.variables_ >= b.variables_ ? b : a;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out.variables_ = std::max(a.variables_, b.variables_);
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.variables_, b.variables_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
  return out;
}

Polynomial Polynomial::exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  Polynomial remainder = a;
  Polynomial result(std::max(a.variables_, b.variables_));
  const auto& [lead_m, lead_c] = *b.terms_.begin();
  while (!remainder.is_zero()) {
    const auto& [m, c] = *remainder.terms_.begin();
    if (!divides(lead_m, m)) throw InternalInconsistency("polynomial division is not exact");
    const Monomial qm = quotient(m, lead_m);
    const Rational qc = c / lead_c;
    result.add_term(qm, qc);
    for (const auto& [mb, cb] : b.terms_) remainder.add_term(product(qm, mb), -qc * cb);
  }
  return result;
}

Rational Polynomial::evaluate(const Vector& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (unsigned e = 0; e < m[k]; ++e) term *= point.at(k);
    total += term;
  }
  return total;
}

}  // namespace lieindex
