// Serial reference kernels against their OpenMP versions, plus the end-to-end
// generating-set computation on the complete graphs.

#include <benchmark/benchmark.h>

#include <random>

#include "eulermin/graph.hpp"
#include "eulermin/ideal.hpp"
#include "eulermin/kernels.hpp"

using namespace eulermin;
using namespace eulermin::kernels;

namespace {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

std::vector<EdgeSet> random_sets(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EdgeSet> out(count);
  for (auto& s : out) s = EdgeSet(rng() & 0xffffffffULL);
  return out;
}

void BM_SpanSerial(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(span_serial(g.cycle_basis(), Parity::Even));
  state.SetLabel("dim " + std::to_string(g.cycle_space_dim()));
}

void BM_SpanParallel(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(span_parallel(g.cycle_basis(), Parity::Even));
  state.SetLabel("dim " + std::to_string(g.cycle_space_dim()));
}

void BM_MinCosetSerial(benchmark::State& state) {
  const auto sets = random_sets(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(min_coset_serial(EdgeSet(0x5555), sets));
}

void BM_MinCosetParallel(benchmark::State& state) {
  const auto sets = random_sets(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(min_coset_parallel(EdgeSet(0x5555), sets));
}

void BM_SubsetScanSerial(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  const auto ends = g.endpoint_masks();
  for (auto _ : state) benchmark::DoNotOptimize(subset_scan_serial(ends, VertexSet{}));
}

void BM_SubsetScanParallel(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  const auto ends = g.endpoint_masks();
  for (auto _ : state) benchmark::DoNotOptimize(subset_scan_parallel(ends, VertexSet{}));
}

void BM_MinimalGeneratingSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // A fresh graph each time so the cached Eulerian sets are rebuilt.
    Graph g = complete_graph(n);
    benchmark::DoNotOptimize(minimal_generating_set(g));
  }
}

}  // namespace

BENCHMARK(BM_SpanSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinCosetSerial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_MinCosetParallel)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SubsetScanSerial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetScanParallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalGeneratingSet)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
