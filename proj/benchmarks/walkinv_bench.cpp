#include <benchmark/benchmark.h>

#include "walkinv/invariants.hpp"
#include "walkinv/linalg.hpp"
#include "walkinv/simulate.hpp"
#include "walkinv/walk_costs.hpp"

using namespace walkinv;

namespace {

Graph bench_graph(std::size_t n) { return random_connected_graph(n, 0.3, 17); }

void BM_Determinant(benchmark::State& state) {
  const RationalMatrix l = delete_rc(laplacian(bench_graph(static_cast<std::size_t>(state.range(0)))), {0});
  for (auto _ : state) benchmark::DoNotOptimize(det(l));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(16)->Arg(32);

void BM_ResistanceMatrix(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resistance_matrix(g));
}
BENCHMARK(BM_ResistanceMatrix)->Arg(6)->Arg(10)->Arg(14);

void BM_HittingLinear(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hitting_matrix_linear(g));
}
BENCHMARK(BM_HittingLinear)->Arg(6)->Arg(10)->Arg(14);

void BM_HittingTetali(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hitting_matrix_tetali(g));
}
BENCHMARK(BM_HittingTetali)->Arg(6)->Arg(10)->Arg(14);

void BM_BivariateDet(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bivariate_det(g));
}
BENCHMARK(BM_BivariateDet)->Arg(5)->Arg(8)->Arg(11);

void BM_CoverWalk(benchmark::State& state) {
  const RootedTree t = random_labelled_tree(static_cast<std::size_t>(state.range(0)), 3);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_cover_time(t.graph, t.root, {.seed = ++seed, .walks = 1}));
}
BENCHMARK(BM_CoverWalk)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
