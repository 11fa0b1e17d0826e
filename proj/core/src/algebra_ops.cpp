#include "lieindex/algebra_ops.hpp"

#include <map>
#include <string>

namespace lieindex {
namespace {

/// [x_i, v] for a sparse v.
SparseVector ad_basis(const LieAlgebra& g, std::size_t i, const SparseVector& v, SparseAccumulator& acc) {
  for (const auto& [m, c] : v) {
    if (m == i) continue;
    if (i < m)
      acc.add(g.upper_bracket(i, m), c);
    else
      acc.add(g.upper_bracket(m, i), -c);
  }
  return acc.take();
}

/// Rows of the linear map x -> ([x, s_q])_q, one row per (q, output coordinate).
std::vector<Vector> commutation_rows(const LieAlgebra& g, const std::vector<SparseVector>& targets) {
  const std::size_t n = g.dim();
  SparseAccumulator acc(n);
  std::map<std::pair<std::size_t, std::size_t>, Vector> rows;
  for (std::size_t q = 0; q < targets.size(); ++q) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : ad_basis(g, i, targets[q], acc)) {
        auto [it, inserted] = rows.try_emplace({q, k}, Vector{});
        if (inserted) it->second = zero_vector(n);
        it->second[i] = c;
      }
    }
  }
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

std::vector<SparseVector> sparse_basis(const Subspace& s) {
  std::vector<SparseVector> out;
  for (const auto& v : s.basis()) out.push_back(to_sparse(v));
  return out;
}

}  // namespace

std::optional<JacobiViolation> check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SparseAccumulator scratch(n);
  SparseAccumulator total(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVector& ij = g.upper_bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const SparseVector& jk = g.upper_bracket(j, k);
        const SparseVector& ik = g.upper_bracket(i, k);
        if (ij.empty() && jk.empty() && ik.empty()) continue;
        // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]], with [x_k,x_i] = -[x_i,x_k].
        total.add(ad_basis(g, i, jk, scratch), Rational(1));
        total.add(ad_basis(g, j, ik, scratch), Rational(-1));
        total.add(ad_basis(g, k, ij, scratch), Rational(1));
        SparseVector residual = total.take();
        if (!residual.empty()) return JacobiViolation{i, j, k, to_dense(residual, n)};
      }
    }
  }
  return std::nullopt;
}

void require_jacobi(const LieAlgebra& g) {
  if (auto v = check_jacobi(g)) {
    throw JacobiError("Jacobi identity fails for basis triple (" + std::to_string(v->i) + ", " +
                      std::to_string(v->j) + ", " + std::to_string(v->k) + ")");
  }
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  Subspace out(g.dim());
  const auto sb = sparse_basis(b);
  for (const auto& va : sparse_basis(a)) {
    for (const auto& vb : sb) {
      SparseVector w = g.bracket(va, vb);
      if (!w.empty()) out.add(to_dense(w, g.dim()));
    }
  }
  return out;
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  return Subspace::span(g.dim(), nullspace_of_rows(commutation_rows(g, sparse_basis(s)), g.dim()));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dim());
  std::vector<Subspace> series{whole};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) {
  const auto series = lower_central_series(g);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

DerivedPair derived_subalgebra_pair(const LieAlgebra& g) {
  const Subspace whole = Subspace::whole(g.dim());
  Subspace derived = bracket_span(g, whole, whole);
  Subspace second = bracket_span(g, derived, derived);
  return {std::move(derived), std::move(second)};
}

Subspace ideal_closure(const LieAlgebra& g, const Subspace& s) {
  Subspace closure = s;
  std::vector<Vector> frontier = s.basis();
  SparseAccumulator acc(g.dim());
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier) {
      const SparseVector sv = to_sparse(v);
      for (std::size_t i = 0; i < g.dim(); ++i) {
        Vector w = to_dense(ad_basis(g, i, sv, acc), g.dim());
        if (closure.add(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

Subspace subalgebra_closure(const LieAlgebra& g, const Subspace& s) {
  Subspace closure = s;
  while (true) {
    const Subspace products = bracket_span(g, closure, closure);
    if (closure.contains(products)) return closure;
    closure = closure.sum(products);
  }
}

std::optional<IdealWitness> find_ideal_violation(const LieAlgebra& g, const Subspace& s) {
  SparseAccumulator acc(g.dim());
  for (std::size_t q = 0; q < s.dim(); ++q) {
    const SparseVector v = to_sparse(s.basis()[q]);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (!s.contains(to_dense(ad_basis(g, i, v, acc), g.dim()))) return IdealWitness{i, q};
    }
  }
  return std::nullopt;
}

NotAnIdeal::NotAnIdeal(IdealWitness w)
    : InvalidArgument("not an ideal: [x_" + std::to_string(w.algebra_index) + ", s_" +
                      std::to_string(w.subspace_index) + "] leaves the subspace"),
      witness(w) {}

QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw InvalidArgument("quotient: subspace lives in a different algebra");
  if (auto w = find_ideal_violation(g, ideal)) throw NotAnIdeal(*w);
  const std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (is_pivot[k]) continue;
    position[k] = complement.size();
    complement.push_back(k);
  }
  const std::size_t m = complement.size();

  auto project = [&](const Vector& v) {
    const Vector r = ideal.reduce(v);
    SparseVector out;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(r[k])) out.emplace_back(position[k], r[k]);
    return out;
  };

  Matrix<Rational> projection(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [row, c] : project(unit_vector(n, j))) projection(row, j) = c;

  std::vector<std::string> labels;
  for (std::size_t k : complement) labels.push_back(g.labels()[k]);
  std::vector<BracketEntry> brackets;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const SparseVector& c = g.upper_bracket(complement[a], complement[b]);
      if (c.empty()) continue;
      SparseVector image = project(to_dense(c, n));
      if (!image.empty()) brackets.push_back({a, b, std::move(image)});
    }
  }
  return {LieAlgebra(std::move(labels), std::move(brackets)), std::move(projection), std::move(complement)};
}

std::optional<std::pair<std::size_t, std::size_t>> find_nonabelian_pair(const LieAlgebra& g, const Subspace& s) {
  const auto basis = sparse_basis(s);
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q)
      if (!g.bracket(basis[p], basis[q]).empty()) return std::make_pair(p, q);
  return std::nullopt;
}

NotAbelian::NotAbelian(std::size_t p, std::size_t q)
    : InvalidArgument("subspace is not abelian: basis vectors " + std::to_string(p) + " and " +
                      std::to_string(q) + " do not commute"),
      first(p),
      second(q) {}

bool is_abelian_subalgebra(const LieAlgebra& g, const Subspace& s) { return !find_nonabelian_pair(g, s).has_value(); }

}  // namespace lieindex
