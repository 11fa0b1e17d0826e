#include "lieindex/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "lieindex/errors.hpp"

namespace lieindex {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out.emplace_back(k, v[k]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out = zero_vector(n);
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

SparseVector negated(SparseVector v) {
  for (auto& term : v) term.second = -term.second;
  return v;
}

void SparseAccumulator::add(std::size_t k, const Rational& c) {
  if (!touched_[k]) {
    touched_[k] = true;
    indices_.push_back(k);
  }
  values_[k] += c;
}

void SparseAccumulator::add(const SparseVector& v, const Rational& scale) {
  for (const auto& [k, c] : v) add(k, c * scale);
}

SparseVector SparseAccumulator::take() {
  std::sort(indices_.begin(), indices_.end());
  SparseVector out;
  for (std::size_t k : indices_) {
    if (!is_zero(values_[k])) out.emplace_back(k, values_[k]);
    values_[k] = 0;
    touched_[k] = false;
  }
  indices_.clear();
  return out;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<BracketEntry> brackets)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& label : labels_)
    if (!seen.insert(label).second) throw InvalidArgument("duplicate basis label '" + label + "'");
  std::vector<bool> assigned(n * n, false);
  for (auto& entry : brackets) {
    if (entry.i >= n || entry.j >= n) throw InvalidArgument("bracket index out of range");
    if (entry.i == entry.j) throw InvalidArgument("bracket of a basis vector with itself must not be given");
    std::size_t i = entry.i, j = entry.j;
    SparseVector coeffs;
    for (auto& [k, c] : entry.coeffs) {
      if (k >= n) throw InvalidArgument("structure constant index out of range");
      if (!is_zero(c)) coeffs.emplace_back(k, c);
    }
    std::sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t t = 1; t < coeffs.size(); ++t)
      if (coeffs[t].first == coeffs[t - 1].first) throw InvalidArgument("repeated coefficient index in bracket");
    if (i > j) {
      std::swap(i, j);
      coeffs = negated(std::move(coeffs));
    }
    if (assigned[i * n + j])
      throw InvalidArgument("bracket [" + std::to_string(i) + "," + std::to_string(j) + "] given twice");
    assigned[i * n + j] = true;
    table_[i * n + j] = std::move(coeffs);
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), {});
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) return upper_bracket(i, j);
  return negated(upper_bracket(j, i));
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseAccumulator acc(dim());
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      if (i == j) continue;
      Rational coeff = a * b;
      if (i > j) coeff = -coeff;
      acc.add(i < j ? upper_bracket(i, j) : upper_bracket(j, i), coeff);
    }
  }
  return acc.take();
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw InvalidArgument("bracket: vector length does not match algebra dimension " + std::to_string(dim()));
  return to_dense(bracket(to_sparse(x), to_sparse(y)), dim());
}

std::vector<BracketEntry> LieAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!table_[i * n + j].empty()) out.push_back({i, j, table_[i * n + j]});
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InvalidArgument("subspace vector has wrong length");
    if (!lieindex::is_zero(v)) s.add(v);
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) { return coordinate_tail(ambient_dim, 0); }

Subspace Subspace::coordinate_tail(std::size_t ambient_dim, std::size_t first) {
  Subspace s(ambient_dim);
  for (std::size_t k = first; k < ambient_dim; ++k) s.add(unit_vector(ambient_dim, k));
  return s;
}

Subspace Subspace::coordinates(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  Subspace s(ambient_dim);
  for (std::size_t k : indices) {
    if (k >= ambient_dim) throw InvalidArgument("coordinate index out of range");
    s.add(unit_vector(ambient_dim, k));
  }
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(), [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.basis()) s.add(v);
  return s;
}

}  // namespace lieindex
