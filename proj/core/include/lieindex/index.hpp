#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/algebra_ops.hpp"
#include "lieindex/lie_algebra.hpp"
#include "lieindex/prime_field.hpp"
#include "lieindex/structure_matrix.hpp"

namespace lieindex {

/// ell in g*, ell(x_k) = coords[k].
struct LinearFunctional {
  Vector coords;
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// Default size gate for certified (symbolic) rank.
inline constexpr std::size_t kDefaultCertifyGate = 40;

struct RankOptions {
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  /// Defaults to PrimeModulus::from_environment().
  std::optional<PrimeModulus> prime;
  bool certify = false;
  std::size_t certify_gate = kDefaultCertifyGate;
};

struct RankMethod {
  enum class Kind { Randomized, Certified };
  Kind kind = Kind::Randomized;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  /// Upper bound on the probability that the randomized rank is too small:
  /// (d / p)^trials with d = max(rows, cols), the largest possible minor degree.
  Rational failure_bound;
};

struct GenericRankResult {
  std::size_t rank = 0;
  RankMethod method;
  /// Specialization point (values in [0, p)) of the best randomized trial.
  std::vector<std::uint64_t> best_point;
};

/// Maximum rank over `trials` random specializations in F_p, or (certify)
/// the exact rank over Q(y). Trials are independent: trial t draws from a
/// stream seeded by (seed, t). Throws CertifyGateError when certify is set
/// and max(rows, cols) exceeds the gate, InvalidArgument when trials == 0.
GenericRankResult generic_rank(const LinearFormMatrix& m, const RankOptions& options = {});

struct IndexOptions {
  RankOptions rank;
  bool witness = false;
};

struct IndexReport {
  std::size_t dim = 0;
  std::size_t index = 0;
  std::size_t generic_rank = 0;
  std::size_t center_dim = 0;
  RankMethod method;
  std::optional<LinearFunctional> witness;
};

/// chi(g) = n - rank M(g). With `witness`, also returns a rational ell with
/// dim g(ell) = chi(g), confirmed by exact computation.
IndexReport index(const LieAlgebra& g, const IndexOptions& options = {});

struct StabilizerResult {
  LinearFunctional functional;
  Matrix<Rational> b_ell;  // B_ell(x_i, x_j) = ell([x_i, x_j])
  Subspace stabilizer;
  std::size_t dim = 0;
};

/// g(ell), the radical of B_ell. Throws InvalidArgument on a length mismatch.
StabilizerResult stabilizer(const LieAlgebra& g, const LinearFunctional& ell);

/// B_ell only.
Matrix<Rational> skew_form(const LieAlgebra& g, const LinearFunctional& ell);

/// min dim g(ell) over `samples` random integer functionals with entries in
/// [-bound, bound]. Never below chi(g).
std::size_t index_by_sampling(const LieAlgebra& g, std::size_t samples, std::uint64_t seed, int bound = 100);

struct OomsResult {
  bool holds = false;
  std::size_t rect_rank = 0;
  /// 2 dim h - dim g, reported when the criterion holds.
  std::optional<std::size_t> predicted_index;
};

/// Rank criterion for an abelian subalgebra h: chi(g) = 2 dim h - dim g iff
/// rank ([x_i, h_j]) = dim g - dim h. Throws NotAbelian.
OomsResult ooms_criterion(const LieAlgebra& g, const Subspace& h, const RankOptions& options = {});

struct AlphaSandwich {
  std::size_t lower = 0;  // dim of the abelian candidate
  std::size_t upper = 0;  // floor((chi + n) / 2)
  bool certified = false;
};

/// Bounds the maximal abelian subalgebra dimension between a witness and
/// floor((chi(g) + dim g) / 2). Throws NotAbelian.
AlphaSandwich alpha_sandwich(const LieAlgebra& g, const Subspace& candidate, const RankOptions& options = {});

}  // namespace lieindex
