#include <benchmark/benchmark.h>

#include "hopdom/hopdom.hpp"

namespace {

using namespace hopdom;

Digraph random_graph(std::size_t n, double p) {
  GenSpec spec;
  spec.n = n;
  spec.p = p;
  spec.seed = n * 10000;
  return generate(spec);
}

void BM_SolveOptimal(benchmark::State& state) {
  const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, {3}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveOptimal)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

void BM_SolvePaperLiteral(benchmark::State& state) {
  const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, {3, CycleMode::kPaperLiteral}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolvePaperLiteral)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

// Functional graphs (every node has a parent) put most nodes on rho components.
void BM_SolveFunctional(benchmark::State& state) {
  const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, {static_cast<Hops>(state.range(1))}));
}
BENCHMARK(BM_SolveFunctional)->ArgsProduct({{100000}, {1, 4, 16}});

void BM_BruteForce(benchmark::State& state) {
  const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.85);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min(g, 2));
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 16, 4);

void BM_Decompose(benchmark::State& state) {
  const Digraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.9);
  for (auto _ : state) {
    for (const auto& nodes : weakly_connected_components(g)) {
      benchmark::DoNotOptimize(classify_component(g, nodes));
    }
  }
}
BENCHMARK(BM_Decompose)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
