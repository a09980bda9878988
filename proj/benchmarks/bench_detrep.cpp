#include <benchmark/benchmark.h>

#include <random>

#include "detrep/detrep.hpp"

using namespace detrep;

namespace {

BivariatePolynomial random_dense(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto t = BivariatePolynomial::empty_table(n);
  for (auto& row : t)
    for (auto& c : row) c = u(rng);
  return BivariatePolynomial(std::move(t));
}

void BM_Lin1Pencil(benchmark::State& state) {
  const auto p = random_dense(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_pencil(p, sparse_tree_heuristic(p)));
}

void BM_Lin2Pencil(benchmark::State& state) {
  const auto p = random_dense(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linearize(p));
}

void BM_Solve(benchmark::State& state, Linearization method) {
  const int n = static_cast<int>(state.range(0));
  const auto p = random_dense(n, 2);
  const auto q = random_dense(n, 3);
  SolveOptions o;
  o.linearization = method;
  std::size_t roots = 0;
  for (auto _ : state) roots = solve_system(p, q, o).size();
  state.counters["roots"] = static_cast<double>(roots);
}

}  // namespace

BENCHMARK(BM_Lin1Pencil)->DenseRange(3, 10);
BENCHMARK(BM_Lin2Pencil)->DenseRange(3, 10);
BENCHMARK_CAPTURE(BM_Solve, lin1, Linearization::Lin1)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, lin2, Linearization::Lin2)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
