#include <gtest/gtest.h>

#include "lieindex/algebra_ops.hpp"
#include "lieindex/errors.hpp"
#include "lieindex/filiform.hpp"
#include "lieindex/free_nilpotent.hpp"
#include "oracles.hpp"

using namespace lieindex;

namespace {

LieAlgebra heisenberg() { return LieAlgebra({"x1", "x2", "x3"}, {{0, 1, {{2, Rational(1)}}}}); }

// F_{2,3} in the basis of the worked example, with one extra coefficient.
LieAlgebra f23_with(std::size_t i, std::size_t j, std::size_t k) {
  std::vector<BracketEntry> b = {{0, 1, {{2, Rational(1)}}}, {0, 2, {{3, Rational(1)}}}, {1, 2, {{4, Rational(1)}}}};
  for (auto& e : b)
    if (e.i == i && e.j == j) e.coeffs.emplace_back(k, Rational(1));
  return LieAlgebra({"x1", "x2", "x3", "x4", "x5"}, b);
}

// Jacobi residuals straight from the bracket table.
bool jacobi_by_brute_force(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  auto br = [&](const std::vector<Rational>& x, std::size_t b) {
    std::vector<Rational> out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [k, c] : g.basis_bracket(a, b)) out[k] += x[a] * c;
    return out;
  };
  auto e = [&](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
  };
  // [x_i,[x_j,x_k]] = -[[x_j,x_k], x_i]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<Rational> sum(n);
        for (auto [a, b, c] : {std::tuple{i, j, k}, std::tuple{j, k, i}, std::tuple{k, i, j}}) {
          const auto inner = br(e(b), c);
          const auto outer = br(inner, a);
          for (std::size_t t = 0; t < n; ++t) sum[t] -= outer[t];
        }
        for (const auto& s : sum)
          if (s != 0) return false;
      }
  return true;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

}  // namespace

TEST(LieAlgebra, RejectsBadInput) {
  EXPECT_THROW(LieAlgebra({"a", "a"}, {}), InvalidArgument);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {{0, 0, {}}}), InvalidArgument);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {{0, 2, {}}}), InvalidArgument);
  EXPECT_THROW(LieAlgebra({"a", "b"}, {{0, 1, {{5, Rational(1)}}}}), InvalidArgument);
  EXPECT_THROW(LieAlgebra({"a", "b", "c"}, {{0, 1, {{2, Rational(1)}}}, {1, 0, {{2, Rational(1)}}}}), InvalidArgument);
}

TEST(LieAlgebra, BracketExamples) {
  const LieAlgebra h = heisenberg();
  EXPECT_EQ(h.bracket(unit_vector(3, 0), unit_vector(3, 1)), unit_vector(3, 2));
  EXPECT_EQ(h.bracket(unit_vector(3, 1), unit_vector(3, 0)), Vector({0, 0, -1}));
  const Vector x = {3, -2, 7};
  EXPECT_TRUE(is_zero(h.bracket(x, x)));
  EXPECT_THROW(h.bracket(Vector{1, 2}, x), InvalidArgument);
  const LieAlgebra f23 = build_free_nilpotent(2, 3).algebra;
  EXPECT_EQ(f23.bracket(unit_vector(5, 0), unit_vector(5, 2)), unit_vector(5, 3));
  // Lower-index entries given as (j, i) are stored negated.
  const LieAlgebra flipped({"x1", "x2", "x3"}, {{1, 0, {{2, Rational(1)}}}});
  EXPECT_EQ(flipped.basis_bracket(0, 1), (SparseVector{{2, Rational(-1)}}));
}

TEST(Jacobi, ExamplesAndCorruption) {
  EXPECT_FALSE(check_jacobi(build_free_nilpotent(3, 3).algebra));
  EXPECT_FALSE(check_jacobi(build_G(7, 5).algebra));

  // [x1,x2] = x3 + x4 only moves x3 by a central element: still a Lie algebra.
  const LieAlgebra shifted = f23_with(0, 1, 3);
  EXPECT_TRUE(jacobi_by_brute_force(shifted));
  EXPECT_FALSE(check_jacobi(shifted));

  // [x1,x2] = x3 + x1 breaks the identity on (x1, x2, x3).
  const LieAlgebra broken = f23_with(0, 1, 0);
  EXPECT_FALSE(jacobi_by_brute_force(broken));
  const auto v = check_jacobi(broken);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->i, 0u);
  EXPECT_EQ(v->j, 1u);
  EXPECT_EQ(v->k, 2u);
  EXPECT_FALSE(is_zero(v->residual));
  EXPECT_THROW(require_jacobi(broken), JacobiError);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(heisenberg()).dim(), 1u);
  EXPECT_EQ(center(build_free_nilpotent(3, 3).algebra).dim(), 8u);
  EXPECT_EQ(center(LieAlgebra::abelian(4)).dim(), 4u);
  for (const auto& g : {build_free_nilpotent(2, 4).algebra, build_L(6).algebra, build_metabelian(2, 5).algebra})
    EXPECT_EQ(center(g).dim(), oracle::center_dim(g));
}

TEST(LowerCentralSeries, Examples) {
  EXPECT_EQ(dims(lower_central_series(build_free_nilpotent(2, 3).algebra)), (std::vector<std::size_t>{5, 3, 2, 0}));
  EXPECT_EQ(dims(lower_central_series(build_L(5).algebra)), (std::vector<std::size_t>{5, 3, 2, 1, 0}));
  EXPECT_EQ(dims(lower_central_series(LieAlgebra::abelian(4))), (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(nilpotency_class(build_L(5).algebra), 4u);
  EXPECT_EQ(nilpotency_class(LieAlgebra::abelian(2)), 1u);
  // sl2-like algebra: [h,e]=2e, [h,f]=-2f, [e,f]=h is not nilpotent.
  const LieAlgebra sl2({"h", "e", "f"}, {{0, 1, {{1, Rational(2)}}}, {0, 2, {{2, Rational(-2)}}}, {1, 2, {{0, Rational(1)}}}});
  EXPECT_FALSE(check_jacobi(sl2));
  EXPECT_FALSE(nilpotency_class(sl2));
}

TEST(DerivedPair, Examples) {
  for (std::size_t g = 2; g <= 4; ++g) EXPECT_EQ(derived_subalgebra_pair(build_free_nilpotent(g, 3).algebra).second_derived.dim(), 0u);
  EXPECT_EQ(derived_subalgebra_pair(build_free_nilpotent(2, 4).algebra).second_derived.dim(), 0u);
  EXPECT_GT(derived_subalgebra_pair(build_free_nilpotent(3, 4).algebra).second_derived.dim(), 0u);
  EXPECT_EQ(derived_subalgebra_pair(heisenberg()).derived.dim(), 1u);
}

TEST(Quotient, Examples) {
  const FreeNilpotentAlgebra f34 = build_free_nilpotent(3, 4);
  const DerivedPair d = derived_subalgebra_pair(f34.algebra);
  const Subspace ideal = ideal_closure(f34.algebra, d.second_derived);
  const QuotientResult q = quotient(f34.algebra, ideal);
  EXPECT_EQ(q.algebra.dim(), f34.dim() - ideal.dim());
  EXPECT_EQ(q.algebra.dim(), build_metabelian(3, 4).dim());
  EXPECT_FALSE(check_jacobi(q.algebra));

  const LieAlgebra h = heisenberg();
  const QuotientResult same = quotient(h, Subspace(3));
  EXPECT_EQ(same.algebra.nonzero_brackets().size(), 1u);
  EXPECT_EQ(same.algebra.basis_bracket(0, 1), h.basis_bracket(0, 1));
  EXPECT_EQ(quotient(h, Subspace::whole(3)).algebra.dim(), 0u);
  const QuotientResult ab = quotient(h, center(h));
  EXPECT_EQ(ab.algebra.dim(), 2u);
  EXPECT_TRUE(ab.algebra.nonzero_brackets().empty());
  EXPECT_EQ(ab.complement, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(ab.projection.rows(), 2u);
  EXPECT_EQ(ab.projection.cols(), 3u);
}

TEST(Quotient, RejectsNonIdeal) {
  const LieAlgebra h = heisenberg();
  const Subspace line = Subspace::coordinates(3, {0});
  EXPECT_TRUE(find_ideal_violation(h, line));
  EXPECT_THROW(quotient(h, line), NotAnIdeal);
}

TEST(Centralizer, Examples) {
  const LieAlgebra f33 = build_free_nilpotent(3, 3).algebra;
  EXPECT_EQ(centralizer(f33, center(f33)).dim(), f33.dim());
  EXPECT_EQ(centralizer(f33, Subspace::whole(f33.dim())), center(f33));
  // L_6 / g^4 is L_4; the centralizer of its derived algebra is span(e2, e3, e4).
  const LieAlgebra l6 = build_L(6).algebra;
  const QuotientResult q = quotient(l6, lower_central_series(l6).at(3));
  ASSERT_EQ(q.algebra.dim(), 4u);
  const Subspace c = centralizer(q.algebra, lower_central_series(q.algebra).at(1));
  EXPECT_EQ(c, Subspace::coordinates(4, {1, 2, 3}));
  for (std::size_t i = 0; i < f33.dim(); ++i)
    EXPECT_TRUE(centralizer(f33, Subspace::coordinates(f33.dim(), {i})).contains(center(f33)));
}

TEST(Abelian, Examples) {
  const LieAlgebra f23 = build_free_nilpotent(2, 3).algebra;
  EXPECT_TRUE(is_abelian_subalgebra(f23, Subspace::coordinates(5, {2, 3, 4})));
  for (std::size_t g = 2; g <= 4; ++g) {
    const LieAlgebra alg = build_free_nilpotent(g, 3).algebra;
    EXPECT_TRUE(is_abelian_subalgebra(alg, lower_central_series(alg).at(1)));
  }
  const LieAlgebra h = heisenberg();
  const Subspace s = Subspace::coordinates(3, {0, 1});
  EXPECT_FALSE(is_abelian_subalgebra(h, s));
  EXPECT_EQ(find_nonabelian_pair(h, s), std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Subspace, Operations) {
  const Subspace a = Subspace::span(3, {{1, 1, 0}});
  const Subspace b = Subspace::span(3, {{0, 1, 1}});
  EXPECT_EQ(a.sum(b).dim(), 2u);
  EXPECT_TRUE(a.sum(b).contains(Vector{1, 0, -1}));
  EXPECT_EQ(Subspace::span(3, {{2, 2, 0}, {1, 1, 0}}), a);
  EXPECT_EQ(Subspace::coordinate_tail(4, 2), Subspace::coordinates(4, {2, 3}));
  EXPECT_TRUE(Subspace::whole(3).contains(a));
  EXPECT_FALSE(a.contains(b));
}

TEST(Closures, GeneratorsGenerate) {
  for (auto [g, c] : {std::pair{2, 4}, std::pair{3, 3}}) {
    const FreeNilpotentAlgebra f = build_free_nilpotent(g, c);
    std::vector<std::size_t> gens(g);
    for (int i = 0; i < g; ++i) gens[i] = i;
    EXPECT_EQ(subalgebra_closure(f.algebra, Subspace::coordinates(f.dim(), gens)).dim(), f.dim());
  }
  const LieAlgebra h = heisenberg();
  EXPECT_EQ(ideal_closure(h, Subspace::coordinates(3, {0})).dim(), 2u);
}
