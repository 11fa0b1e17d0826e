#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/index.hpp"
#include "lieindex/lie_algebra.hpp"
#include "lieindex/matrix.hpp"

namespace lieindex {

enum class FiliformFamily { L, Q, G, Custom };

/// Filiform algebra in an adapted basis e_1..e_n (0-based in code):
/// [e_1, e_i] = e_{i+1} for 2 <= i <= n-1, [e_1, e_n] = 0,
/// [e_i, e_j] in span(e_{i+j}..e_n) for i + j <= n,
/// [e_i, e_{n+1-i}] = (-1)^i alpha e_n, and [e_i, e_j] = 0 for i + j > n + 1.
struct FiliformAlgebra {
  LieAlgebra algebra;
  FiliformFamily family = FiliformFamily::Custom;
  /// Second parameter of g_{n,k}; 0 for other families.
  std::size_t k = 0;
  /// The scalar alpha of the (n+1)-diagonal; zero for odd n.
  Rational alpha;

  std::size_t dim() const { return algebra.dim(); }
};

/// First violated adapted-basis condition, or nullopt.
std::optional<std::string> adapted_basis_violation(const LieAlgebra& g);

/// Wraps an algebra given in an adapted basis; throws InvalidArgument if the
/// basis is not adapted or the lower central series is not n, n-2, ..., 1, 0.
FiliformAlgebra make_filiform(LieAlgebra g, FiliformFamily family = FiliformFamily::Custom, std::size_t k = 0);

/// L_n: only [e_1, e_i] = e_{i+1}. Requires n >= 3.
FiliformAlgebra build_L(std::size_t n);

/// Q_n: L_n plus [e_i, e_{n+1-i}] = (-1)^i e_n for 2 <= i <= n/2.
/// Requires n even, n >= 4.
FiliformAlgebra build_Q(std::size_t n);

/// D is a derivation of a iff D[x, y] = [Dx, y] + [x, Dy] on basis pairs.
bool is_derivation(const LieAlgebra& a, const Matrix<Rational>& d);

/// a x| <t> with [t, x] = D x; t becomes basis vector 0 and a's basis
/// follows in order.
LieAlgebra semidirect_with_derivation(const LieAlgebra& a, const Matrix<Rational>& d, std::vector<std::string> labels);

/// g_{n,k} built as a semidirect product: a = span(e~_2..e~_n) with
/// [e~_i, e~_j] = (-1)^i e~_n iff i + j = k, extended by the shift
/// derivation e~_i -> e~_{i+1}. Requires n >= 3, k odd, 3 <= k <= n.
FiliformAlgebra build_G(std::size_t n, std::size_t k);

/// g_i = span(e_i..e_n) for i = 1..n (element i-1 of the result). Checks
/// that g_i coincides with the lower central series term g^{i-1} for i >= 3.
std::vector<Subspace> filiform_ideals(const FiliformAlgebra& f);

struct IndexOneResult {
  bool is_index_one = false;
  /// First i (1-based) with [g_i, g_{n-i}] = 0.
  std::optional<std::size_t> witness;
  /// alpha_i = e_n-coefficient of [e_i, e_{n-i}], i = 1..n-1.
  std::vector<Rational> alphas;
};

/// For odd n: chi = 1 iff [g_i, g_{n-i}] != 0 for all 1 <= i <= n-1.
/// Throws InvalidArgument for even n.
IndexOneResult index_one_criterion(const FiliformAlgebra& f);

/// n - 2(k-1) when [g_k, g_k] = 0, else nullopt. Requires 2 <= k <= n.
std::optional<long> lower_bound(const FiliformAlgebra& f, std::size_t k);

/// Sorted distinct indices of g_{n,k} over odd k in [3, n].
std::vector<std::size_t> achievable_indices(std::size_t n, const RankOptions& options = {});

/// Graded filiform algebra: L_n plus [e_i, e_{s-i}] = (-1)^i gamma_s e_n for
/// odd s in [5, n] (and s = n+1 when n is even), with small random gamma_s,
/// each zero with probability about 1/3.
FiliformAlgebra random_graded_filiform(std::size_t n, std::uint64_t seed);

/// Same algebra in a new adapted basis e'_1 = e_1 + sum_{t>=3} a_t e_t,
/// e'_2 = e_2 + sum_{t>=3} b_t e_t, e'_{i+1} = [e'_1, e'_i], with small
/// random integers a_t, b_t.
FiliformAlgebra random_adapted_basis_change(const FiliformAlgebra& f, std::uint64_t seed);

/// random_adapted_basis_change(random_graded_filiform(n, seed), seed + 1).
FiliformAlgebra random_adapted_filiform(std::size_t n, std::uint64_t seed);

/// e_n^* for a filiform algebra of dimension n.
LinearFunctional last_dual(std::size_t n);

}  // namespace lieindex
