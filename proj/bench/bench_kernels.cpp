// Serial reference loops against their OpenMP counterparts on the same inputs.

#include <benchmark/benchmark.h>

#include "contra/corpus.hpp"
#include "contra/oracles.hpp"
#include "contra/transversals.hpp"

namespace {

using contra::Execution;
using contra::Graph;
using contra::TransversalKind;

Graph connected_random(int n, double p, std::uint64_t seed) {
  std::uint64_t state = seed;
  for (;;) {
    Graph g = contra::random_graph(n, p, state);
    if (contra::is_connected(g)) return g;
  }
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_MinimalSets(benchmark::State& state) {
  Graph g = connected_random(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) {
    auto sets = contra::brute_force_minimal_sets(g, TransversalKind::kFeedbackVertexSet, 24, mode(state));
    benchmark::DoNotOptimize(sets.data());
  }
}

void BM_MinConnectedOracle(benchmark::State& state) {
  Graph g = connected_random(static_cast<int>(state.range(0)), 0.25, 13);
  for (auto _ : state) {
    auto report = contra::brute_force_min_connected(g, TransversalKind::kOddCycleTransversal, 24, mode(state));
    benchmark::DoNotOptimize(report.size);
  }
}

void BM_PaddingReduction(benchmark::State& state) {
  Graph g = connected_random(static_cast<int>(state.range(0)), 0.3, 17);
  contra::ConnectedSolveOptions options;
  options.pad_budget = g.n();
  options.execution = mode(state);
  for (auto _ : state) {
    auto report = contra::min_connected_transversal(g, TransversalKind::kFeedbackVertexSet, options);
    benchmark::DoNotOptimize(report.size);
  }
}

}  // namespace

// second argument: 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_MinimalSets)->ArgsProduct({{14, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinConnectedOracle)->ArgsProduct({{16, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PaddingReduction)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
