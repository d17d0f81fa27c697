#include <benchmark/benchmark.h>

#include "cliquelist/enumeration.hpp"
#include "cliquelist/generators.hpp"
#include "cliquelist/ordering.hpp"

namespace {

using namespace cliquelist;

void BM_AllCliquesComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  std::uint64_t count = 0;
  for (auto _ : state) count = all_cliques(g, {}).clique_count;
  state.counters["cliques_per_s"] =
      benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_AllCliquesComplete)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_DegenerateCliquesKTree(benchmark::State& state) {
  const Graph g = k_tree(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(degenerate_cliques(g, {}));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_DegenerateCliquesKTree)
    ->ArgsProduct({{2, 4, 6}, {1000, 4000, 16000}})
    ->Unit(benchmark::kMillisecond);

void BM_DegeneracyOrderingApollonian(benchmark::State& state) {
  const Graph g = apollonian(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy_ordering(g).degeneracy);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DegeneracyOrderingApollonian)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_AllCliquesBipartite(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Graph g = complete_bipartite(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(all_cliques(g, {}).max_gap);
}
BENCHMARK(BM_AllCliquesBipartite)->RangeMultiplier(2)->Range(16, 256);

void BM_IntersectAscending(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  VertexSet a, b, out;
  for (Vertex v = 0; v < n; ++v) {
    a.push_back(2 * v);
    b.push_back(3 * v);
  }
  for (auto _ : state) {
    intersect_ascending_into(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_IntersectAscending)->Range(8, 4096);

}  // namespace

BENCHMARK_MAIN();
