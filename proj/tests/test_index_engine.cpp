#include <gtest/gtest.h>

#include <cstdlib>

#include "lieindex/algebra_ops.hpp"
#include "lieindex/errors.hpp"
#include "lieindex/filiform.hpp"
#include "lieindex/free_nilpotent.hpp"
#include "lieindex/graph.hpp"
#include "lieindex/index.hpp"
#include "lieindex/structure_matrix.hpp"
#include "oracles.hpp"

using namespace lieindex;

namespace {

RankOptions certified() {
  RankOptions o;
  o.certify = true;
  return o;
}

std::vector<LieAlgebra> small_corpus() {
  return {build_free_nilpotent(2, 2).algebra, build_free_nilpotent(2, 3).algebra, build_free_nilpotent(2, 4).algebra,
          build_free_nilpotent(3, 2).algebra, build_free_nilpotent(3, 3).algebra, build_free_nilpotent(4, 2).algebra,
          build_metabelian(2, 5).algebra,     build_L(7).algebra,                 build_Q(8).algebra,
          build_G(9, 5).algebra,              build_graph_algebra(SimpleGraph::cycle(5)),
          LieAlgebra::abelian(3)};
}

}  // namespace

TEST(StructureMatrix, WorkedExample) {
  const StructureMatrix m = structure_matrix(build_free_nilpotent(2, 3).algebra);
  ASSERT_EQ(m.rows(), 5u);
  EXPECT_EQ(m.variables(), 5u);
  EXPECT_EQ(m.entry(0, 1), (SparseVector{{2, Rational(1)}}));
  EXPECT_EQ(m.entry(0, 2), (SparseVector{{3, Rational(1)}}));
  EXPECT_EQ(m.entry(1, 2), (SparseVector{{4, Rational(1)}}));
  EXPECT_EQ(m.entry(2, 1), (SparseVector{{4, Rational(-1)}}));
  EXPECT_TRUE(m.row(3).empty());
  EXPECT_TRUE(m.row(4).empty());
  EXPECT_TRUE(m.is_skew_symmetric());
}

TEST(StructureMatrix, AbelianAndGraph) {
  const StructureMatrix zero = structure_matrix(LieAlgebra::abelian(4));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(zero.row(i).empty());
  const SimpleGraph g = SimpleGraph::cycle(5);
  const StructureMatrix m = structure_matrix(build_graph_algebra(g));
  for (std::size_t i = 5; i < 10; ++i) {
    EXPECT_TRUE(m.row(i).empty());
    for (std::size_t r = 0; r < 10; ++r) EXPECT_TRUE(m.entry(r, i).empty());
  }
}

TEST(GenericRank, Examples) {
  EXPECT_EQ(generic_rank(structure_matrix(build_free_nilpotent(2, 3).algebra)).rank, 2u);
  EXPECT_EQ(generic_rank(structure_matrix(build_free_nilpotent(2, 3).algebra), certified()).rank, 2u);
  EXPECT_EQ(generic_rank(structure_matrix(build_free_nilpotent(3, 4).algebra)).rank, 8u);
  EXPECT_EQ(generic_rank(structure_matrix(build_free_nilpotent(4, 2).algebra)).rank, 4u);
  EXPECT_EQ(generic_rank(structure_matrix(build_free_nilpotent(5, 2).algebra)).rank, 4u);
}

TEST(GenericRank, Errors) {
  RankOptions none;
  none.trials = 0;
  EXPECT_THROW(generic_rank(structure_matrix(build_free_nilpotent(2, 2).algebra), none), InvalidArgument);
  EXPECT_THROW(generic_rank(structure_matrix(build_free_nilpotent(4, 4).algebra), certified()), CertifyGateError);
  RankOptions small_gate = certified();
  small_gate.certify_gate = 10;
  EXPECT_THROW(generic_rank(structure_matrix(build_free_nilpotent(3, 3).algebra), small_gate), CertifyGateError);
}

TEST(GenericRank, MethodMetadata) {
  ::unsetenv("LIEINDEX_PRIME");
  const GenericRankResult r = generic_rank(structure_matrix(build_free_nilpotent(3, 3).algebra));
  EXPECT_EQ(r.method.kind, RankMethod::Kind::Randomized);
  EXPECT_EQ(r.method.trials, 3u);
  EXPECT_EQ(r.method.seed, 0u);
  EXPECT_EQ(r.method.prime, kDefaultPrime);
  Rational q(14, 1);
  q /= Rational(Integer(std::to_string(kDefaultPrime)));
  EXPECT_EQ(r.method.failure_bound, q * q * q);
  EXPECT_EQ(r.best_point.size(), 14u);
  for (auto v : r.best_point) EXPECT_LT(v, kDefaultPrime);

  ::setenv("LIEINDEX_PRIME", "4611686018427388039", 1);
  EXPECT_EQ(generic_rank(structure_matrix(build_free_nilpotent(3, 3).algebra)).method.prime, 4611686018427388039ULL);
  ::unsetenv("LIEINDEX_PRIME");

  const GenericRankResult c = generic_rank(structure_matrix(build_free_nilpotent(3, 3).algebra), certified());
  EXPECT_EQ(c.method.kind, RankMethod::Kind::Certified);
  EXPECT_EQ(c.method.failure_bound, 0);
}

TEST(GenericRank, ReproducibleForFixedSeed) {
  const StructureMatrix m = structure_matrix(build_free_nilpotent(3, 4).algebra);
  RankOptions o;
  o.seed = 42;
  o.trials = 5;
  const GenericRankResult a = generic_rank(m, o), b = generic_rank(m, o);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.best_point, b.best_point);
  o.seed = 43;
  EXPECT_NE(generic_rank(m, o).best_point, a.best_point);
}

TEST(GenericRank, RandomizedNeverExceedsCertified) {
  for (const auto& g : small_corpus()) {
    const StructureMatrix m = structure_matrix(g);
    const std::size_t exact = generic_rank(m, certified()).rank;
    EXPECT_EQ(exact % 2, 0u);
    EXPECT_EQ(generic_rank(m).rank, exact);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      RankOptions one;
      one.trials = 1;
      one.seed = seed;
      EXPECT_LE(generic_rank(m, one).rank, exact);
    }
  }
}

TEST(GenericRank, BareissOnSpecializedMatrices) {
  // A polynomial matrix of rank 2 whose numeric specializations vary.
  const LinearFormMatrix m = [] {
    LinearFormMatrix out(3, 3, 2);
    out.set(0, 0, {{0, Rational(1)}});
    out.set(0, 1, {{1, Rational(1)}});
    out.set(1, 0, {{0, Rational(2)}});
    out.set(1, 1, {{1, Rational(2)}});
    out.set(2, 2, {{0, Rational(1)}, {1, Rational(-1)}});
    return out;
  }();
  EXPECT_EQ(bareiss_rank(m.to_polynomials()), 2u);
  EXPECT_EQ(generic_rank(m).rank, 2u);
  EXPECT_EQ(rank(m.specialize(Vector{1, 1})), 1u);
}

TEST(Index, Examples) {
  EXPECT_EQ(index(build_free_nilpotent(2, 2).algebra).index, 1u);
  EXPECT_EQ(index(build_free_nilpotent(4, 4).algebra).index, 76u);
  EXPECT_EQ(index(build_free_nilpotent(5, 3).algebra).index, 45u);
  const IndexReport empty = index(LieAlgebra::abelian(0));
  EXPECT_EQ(empty.index, 0u);
  EXPECT_EQ(empty.dim, 0u);
}

TEST(Index, WitnessAttainsIndex) {
  IndexOptions o;
  o.witness = true;
  for (const auto& g : small_corpus()) {
    const IndexReport r = index(g, o);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(oracle::stabilizer_dim(g, r.witness->coords), r.index);
    EXPECT_EQ(stabilizer(g, *r.witness).dim, r.index);
    EXPECT_EQ(r.dim - r.generic_rank, r.index);
    EXPECT_LE(r.center_dim, r.index);
    EXPECT_EQ(r.center_dim, oracle::center_dim(g));
  }
}

TEST(Index, AgreesWithSampledOracle) {
  for (const auto& g : small_corpus()) EXPECT_EQ(index(g).index, oracle::sampled_index(g, 30, 5));
}

TEST(Stabilizer, Examples) {
  const LieAlgebra f33 = build_free_nilpotent(3, 3).algebra;
  const StabilizerResult zero = stabilizer(f33, LinearFunctional{zero_vector(14)});
  EXPECT_EQ(zero.dim, 14u);

  const FreeNilpotentAlgebra p = build_fg3_paper_basis(3);
  LinearFunctional ell{zero_vector(p.dim())};
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (std::size_t i = 1; i <= k; ++i) ell.coords[fg3_triple_index(3, i, j, k)] = Rational(i + j + k);
  EXPECT_EQ(stabilizer(p.algebra, ell).dim, 8u);
  EXPECT_EQ(oracle::stabilizer_dim(p.algebra, ell.coords), 8u);

  EXPECT_EQ(stabilizer(build_Q(6).algebra, last_dual(6)).dim, 2u);
  EXPECT_THROW(stabilizer(f33, LinearFunctional{zero_vector(3)}), InvalidArgument);
}

TEST(Stabilizer, Invariants) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (const auto& g : small_corpus()) {
    const Subspace z = center(g);
    const std::size_t chi = index(g).index;
    for (int t = 0; t < 5; ++t) {
      LinearFunctional ell{zero_vector(g.dim())};
      for (auto& x : ell.coords) x = coeff(rng);
      const StabilizerResult s = stabilizer(g, ell);
      EXPECT_EQ((g.dim() - s.dim) % 2, 0u);
      EXPECT_GE(s.dim, chi);
      EXPECT_TRUE(s.stabilizer.contains(z));
      EXPECT_EQ(s.dim, oracle::stabilizer_dim(g, ell.coords));
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(s.b_ell(i, j), -s.b_ell(j, i));
    }
  }
}

TEST(Sampling, Examples) {
  EXPECT_EQ(index_by_sampling(build_free_nilpotent(2, 2).algebra, 20, 0), 1u);
  EXPECT_EQ(index_by_sampling(build_free_nilpotent(3, 3).algebra, 50, 0), 8u);
  EXPECT_EQ(index_by_sampling(build_L(6).algebra, 50, 0), 4u);
  EXPECT_THROW(index_by_sampling(build_L(6).algebra, 0, 0), InvalidArgument);
}

TEST(Ooms, Examples) {
  const LieAlgebra m34 = build_metabelian(3, 4).algebra;
  const OomsResult a = ooms_criterion(m34, lower_central_series(m34).at(1));
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.rect_rank, 3u);
  EXPECT_EQ(a.predicted_index, index(m34).index);

  const LieAlgebra m25 = build_metabelian(2, 5).algebra;
  const OomsResult b = ooms_criterion(m25, lower_central_series(m25).at(1));
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.rect_rank, 2u);

  const LieAlgebra h = build_free_nilpotent(2, 2).algebra;
  const OomsResult c = ooms_criterion(h, center(h));
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.rect_rank, 0u);
  EXPECT_FALSE(c.predicted_index);

  EXPECT_THROW(ooms_criterion(h, Subspace::coordinates(3, {0, 1})), NotAbelian);
}

TEST(AlphaSandwich, Examples) {
  const LieAlgebra f33 = build_free_nilpotent(3, 3).algebra;
  const AlphaSandwich a = alpha_sandwich(f33, lower_central_series(f33).at(1));
  EXPECT_EQ(a.lower, 11u);
  EXPECT_EQ(a.upper, 11u);
  EXPECT_TRUE(a.certified);

  const LieAlgebra m34 = build_metabelian(3, 4).algebra;
  const AlphaSandwich b = alpha_sandwich(m34, lower_central_series(m34).at(1));
  EXPECT_TRUE(b.certified);
  EXPECT_EQ(b.lower, m34.dim() - 3);

  const LieAlgebra f42 = build_free_nilpotent(4, 2).algebra;
  Subspace witness = center(f42);
  witness.add(unit_vector(f42.dim(), 0));
  const AlphaSandwich c = alpha_sandwich(f42, witness);
  EXPECT_EQ(c.lower, 7u);
  EXPECT_EQ(c.upper, 8u);
  EXPECT_FALSE(c.certified);

  EXPECT_THROW(alpha_sandwich(f42, Subspace::whole(f42.dim())), NotAbelian);
}
