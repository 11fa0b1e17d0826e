#include "lieindex/filiform.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lieindex/algebra_ops.hpp"
#include "lieindex/errors.hpp"

namespace lieindex {
namespace {

std::vector<std::string> e_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

/// e_n-coefficient of a sparse vector in dimension n.
Rational last_coefficient(const SparseVector& v, std::size_t n) {
  if (!v.empty() && v.back().first == n - 1) return v.back().second;
  return 0;
}

std::vector<BracketEntry> shift_brackets(std::size_t n) {
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 1; i + 1 < n; ++i) brackets.push_back({0, i, {{i + 1, Rational(1)}}});
  return brackets;
}

Rational sign(std::size_t i) { return i % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

std::optional<std::string> adapted_basis_violation(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n < 3) return "filiform algebras have dimension at least 3";
  // 1-based names below; code indices are one less.
  for (std::size_t i = 2; i <= n - 1; ++i)
    if (g.basis_bracket(0, i - 1) != SparseVector{{i, Rational(1)}})
      return "[e1,e" + std::to_string(i) + "] != e" + std::to_string(i + 1);
  if (!g.basis_bracket(0, n - 1).empty()) return "[e1,e" + std::to_string(n) + "] != 0";
  // For n = 4, [e2,e3] lies on the (n+1)-diagonal and is checked below.
  if (n != 4)
    for (const auto& [k, c] : g.basis_bracket(1, 2))
      if (k + 1 < 5) return "[e2,e3] is not in span(e5..en)";
  std::optional<Rational> alpha;
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const SparseVector v = g.basis_bracket(i - 1, j - 1);
      const std::string where = "[e" + std::to_string(i) + ",e" + std::to_string(j) + "]";
      if (i + j <= n) {
        for (const auto& [k, c] : v)
          if (k + 1 < i + j) return where + " is not in span(e" + std::to_string(i + j) + "..en)";
      } else if (i + j == n + 1) {
        if (!v.empty() && (v.size() != 1 || v.front().first != n - 1)) return where + " is not a multiple of en";
        const Rational a = last_coefficient(v, n) * sign(i);
        if (alpha && *alpha != a) return where + " breaks the (-1)^i alpha pattern";
        alpha = a;
      } else if (!v.empty()) {
        return where + " must vanish";
      }
    }
  }
  if (n % 2 == 1 && alpha && !is_zero(*alpha)) return "alpha must vanish in odd dimension";
  return std::nullopt;
}

FiliformAlgebra make_filiform(LieAlgebra g, FiliformFamily family, std::size_t k) {
  if (auto why = adapted_basis_violation(g)) throw InvalidArgument("basis is not adapted: " + *why);
  const std::size_t n = g.dim();
  const auto series = lower_central_series(g);
  std::vector<std::size_t> dims;
  for (const auto& s : series) dims.push_back(s.dim());
  std::vector<std::size_t> expected{n};
  for (std::size_t d = n - 2; d >= 1; --d) expected.push_back(d);
  expected.push_back(0);
  if (dims != expected) throw InvalidArgument("lower central series is not of maximal class");
  FiliformAlgebra f;
  f.alpha = n >= 4 ? last_coefficient(g.basis_bracket(1, n - 2), n) : Rational(0);
  f.algebra = std::move(g);
  f.family = family;
  f.k = k;
  return f;
}

FiliformAlgebra build_L(std::size_t n) {
  if (n < 3) throw InvalidArgument("L_n needs n >= 3");
  return make_filiform(LieAlgebra(e_labels(n), shift_brackets(n)), FiliformFamily::L);
}

FiliformAlgebra build_Q(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("Q_n is defined for even n >= 4");
  auto brackets = shift_brackets(n);
  for (std::size_t i = 2; i <= n / 2; ++i) brackets.push_back({i - 1, n - i, {{n - 1, sign(i)}}});
  return make_filiform(LieAlgebra(e_labels(n), std::move(brackets)), FiliformFamily::Q);
}

bool is_derivation(const LieAlgebra& a, const Matrix<Rational>& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw InvalidArgument("derivation matrix has wrong size");
  auto image = [&](std::size_t i) {
    Vector v = zero_vector(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = d(r, i);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = multiply(d, to_dense(a.basis_bracket(i, j), n));
      Vector rhs = a.bracket(image(i), unit_vector(n, j));
      const Vector second = a.bracket(unit_vector(n, i), image(j));
      for (std::size_t r = 0; r < n; ++r) rhs[r] += second[r];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

LieAlgebra semidirect_with_derivation(const LieAlgebra& a, const Matrix<Rational>& d, std::vector<std::string> labels) {
  const std::size_t m = a.dim();
  if (labels.size() != m + 1) throw InvalidArgument("semidirect product needs one label per basis vector");
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < m; ++i) {
    SparseVector image;
    for (std::size_t r = 0; r < m; ++r)
      if (!is_zero(d(r, i))) image.emplace_back(r + 1, d(r, i));
    if (!image.empty()) brackets.push_back({0, i + 1, std::move(image)});
  }
  for (const auto& b : a.nonzero_brackets()) {
    SparseVector shifted;
    for (const auto& [k, c] : b.coeffs) shifted.emplace_back(k + 1, c);
    brackets.push_back({b.i + 1, b.j + 1, std::move(shifted)});
  }
  return LieAlgebra(std::move(labels), std::move(brackets));
}

FiliformAlgebra build_G(std::size_t n, std::size_t k) {
  if (n < 3) throw InvalidArgument("g_{n,k} needs n >= 3");
  if (k % 2 == 0 || k < 3 || k > n) throw InvalidArgument("g_{n,k} needs k odd with 3 <= k <= n");
  // a has basis e~_2..e~_n at code indices 0..n-2; e~_i sits at i - 2.
  const std::size_t m = n - 1;
  std::vector<std::string> a_labels;
  for (std::size_t i = 2; i <= n; ++i) a_labels.push_back("e~" + std::to_string(i));
  std::vector<BracketEntry> a_brackets;
  for (std::size_t i = 2; i <= n; ++i) {
    const std::size_t j = k - i;
    if (j <= i || j > n) continue;
    a_brackets.push_back({i - 2, j - 2, {{n - 2, sign(i)}}});
  }
  const LieAlgebra a(std::move(a_labels), std::move(a_brackets));
  require_jacobi(a);
  Matrix<Rational> shift(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) shift(i + 1, i) = 1;
  if (!is_derivation(a, shift)) throw InternalInconsistency("shift map is not a derivation of a");
  FiliformAlgebra f = make_filiform(semidirect_with_derivation(a, shift, e_labels(n)), FiliformFamily::G, k);
  return f;
}

std::vector<Subspace> filiform_ideals(const FiliformAlgebra& f) {
  if (auto why = adapted_basis_violation(f.algebra)) throw InvalidArgument("basis is not adapted: " + *why);
  const std::size_t n = f.dim();
  std::vector<Subspace> ideals;
  for (std::size_t i = 1; i <= n; ++i) ideals.push_back(Subspace::coordinate_tail(n, i - 1));
  const auto series = lower_central_series(f.algebra);
  for (std::size_t i = 3; i <= n; ++i)
    if (!(ideals[i - 1] == series.at(i - 2)))
      throw InternalInconsistency("g_" + std::to_string(i) + " differs from g^" + std::to_string(i - 1));
  return ideals;
}

IndexOneResult index_one_criterion(const FiliformAlgebra& f) {
  const std::size_t n = f.dim();
  if (n % 2 == 0) throw InvalidArgument("index-one criterion applies to odd-dimensional filiform algebras");
  const auto ideals = filiform_ideals(f);
  IndexOneResult out;
  out.is_index_one = true;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    const Rational alpha = last_coefficient(f.algebra.basis_bracket(i - 1, n - i - 1), n);
    const bool brackets_vanish = bracket_span(f.algebra, ideals[i - 1], ideals[n - i - 1]).is_zero();
    if (brackets_vanish != is_zero(alpha))
      throw InternalInconsistency("[g_i, g_{n-i}] disagrees with alpha_" + std::to_string(i));
    out.alphas.push_back(alpha);
    if (is_zero(alpha) && out.is_index_one) {
      out.is_index_one = false;
      out.witness = i;
    }
  }
  return out;
}

std::optional<long> lower_bound(const FiliformAlgebra& f, std::size_t k) {
  const std::size_t n = f.dim();
  if (k < 2 || k > n) throw InvalidArgument("lower bound needs 2 <= k <= n");
  const Subspace gk = Subspace::coordinate_tail(n, k - 1);
  if (!is_abelian_subalgebra(f.algebra, gk)) return std::nullopt;
  return static_cast<long>(n) - 2 * (static_cast<long>(k) - 1);
}

std::vector<std::size_t> achievable_indices(std::size_t n, const RankOptions& options) {
  if (n < 3) throw InvalidArgument("achievable indices need n >= 3");
  IndexOptions index_options;
  index_options.rank = options;
  std::set<std::size_t> indices;
  for (std::size_t k = 3; k <= n; k += 2) indices.insert(index(build_G(n, k).algebra, index_options).index);
  return {indices.begin(), indices.end()};
}

FiliformAlgebra random_graded_filiform(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("filiform algebras need n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  auto brackets = shift_brackets(n);
  std::vector<std::size_t> diagonals;
  for (std::size_t s = 5; s <= n; s += 2) diagonals.push_back(s);
  if (n % 2 == 0) diagonals.push_back(n + 1);
  // [e_i, e_{s-i}] = (-1)^i gamma_s e_n: the shift is then a derivation of
  // span(e_2..e_n) and every triple bracket vanishes.
  for (std::size_t s : diagonals) {
    int gamma = 0;
    if (keep(rng) != 0)
      while (gamma == 0) gamma = value(rng);
    if (gamma == 0) continue;
    for (std::size_t i = 2; 2 * i < s; ++i) {
      const std::size_t j = s - i;
      if (j > n || (s == n + 1 && j == n)) continue;
      brackets.push_back({i - 1, j - 1, {{n - 1, sign(i) * gamma}}});
    }
  }
  return make_filiform(LieAlgebra(e_labels(n), std::move(brackets)));
}

FiliformAlgebra random_adapted_basis_change(const FiliformAlgebra& f, std::uint64_t seed) {
  const std::size_t n = f.dim();
  const LieAlgebra& g = f.algebra;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-2, 2);
  // Columns of `basis` are the new vectors e'_i in old coordinates.
  std::vector<Vector> basis(n, zero_vector(n));
  basis[0][0] = 1;
  basis[1][1] = 1;
  for (std::size_t t = 2; t < n; ++t) {
    basis[0][t] = value(rng);
    basis[1][t] = value(rng);
  }
  for (std::size_t i = 2; i < n; ++i) basis[i] = g.bracket(basis[0], basis[i - 1]);
  // e'_i = e_i + (terms in e_{i+1}..e_n): solve by forward substitution.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r <= i; ++r)
      if (basis[i][r] != (r == i ? 1 : 0)) throw InternalInconsistency("basis change is not unitriangular");
  auto coordinates = [&](Vector w) {
    Vector c = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = w[i];
      if (is_zero(c[i])) continue;
      for (std::size_t r = i; r < n; ++r) w[r] -= c[i] * basis[i][r];
    }
    return c;
  };
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector v = to_sparse(coordinates(g.bracket(basis[i], basis[j])));
      if (!v.empty()) brackets.push_back({i, j, std::move(v)});
    }
  }
  return make_filiform(LieAlgebra(e_labels(n), std::move(brackets)), FiliformFamily::Custom);
}

FiliformAlgebra random_adapted_filiform(std::size_t n, std::uint64_t seed) {
  return random_adapted_basis_change(random_graded_filiform(n, seed), seed + 1);
}

LinearFunctional last_dual(std::size_t n) { return LinearFunctional{unit_vector(n, n - 1)}; }

}  // namespace lieindex
