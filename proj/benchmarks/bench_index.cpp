#include <benchmark/benchmark.h>

#include <random>

#include "lieindex/filiform.hpp"
#include "lieindex/free_nilpotent.hpp"
#include "lieindex/graph.hpp"
#include "lieindex/index.hpp"
#include "lieindex/structure_matrix.hpp"

using namespace lieindex;

namespace {

void BM_RankModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PrimeModulus p = PrimeModulus::from_environment();
  std::mt19937_64 rng(1);
  Matrix<Fp> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Fp(rng(), p);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankModP)->Arg(32)->Arg(90)->Arg(200);

void BM_BuildFree(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_free_nilpotent(g, c).dim());
}
BENCHMARK(BM_BuildFree)->Args({3, 4})->Args({4, 4})->Args({3, 5});

void BM_IndexFree(benchmark::State& state) {
  const LieAlgebra g = build_free_nilpotent(static_cast<std::size_t>(state.range(0)),
                                            static_cast<std::size_t>(state.range(1)))
                           .algebra;
  for (auto _ : state) benchmark::DoNotOptimize(index(g).index);
}
BENCHMARK(BM_IndexFree)->Args({3, 4})->Args({4, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_CertifiedIndex(benchmark::State& state) {
  const LieAlgebra g = build_G(static_cast<std::size_t>(state.range(0)), 5).algebra;
  IndexOptions o;
  o.rank.certify = true;
  for (auto _ : state) benchmark::DoNotOptimize(index(g, o).index);
}
BENCHMARK(BM_CertifiedIndex)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_GraphIndex(benchmark::State& state) {
  const SimpleGraph g = SimpleGraph::random(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(graph_index(g).index);
}
BENCHMARK(BM_GraphIndex)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
