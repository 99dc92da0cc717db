#include <benchmark/benchmark.h>

#include "girthroot/generators.hpp"
#include "girthroot/leafless_roots.hpp"
#include "girthroot/recognition.hpp"
#include "girthroot/tree_roots.hpp"

using namespace girthroot;

namespace {

Graph class_power(std::uint32_t r, std::uint32_t vertices, double attach = 0.0) {
  GenConfig cfg;
  cfg.r = r;
  cfg.seed = 3;
  cfg.min_vertices = vertices;
  cfg.max_vertices = vertices;
  cfg.attach_probability = attach;
  return graph_power(attach_random_trees(random_leafless_girth_graph(cfg), cfg), r);
}

void BM_GraphPower(benchmark::State& state) {
  GenConfig cfg;
  cfg.r = 3;
  cfg.min_vertices = cfg.max_vertices = static_cast<std::uint32_t>(state.range(0));
  Graph h = random_leafless_girth_graph(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(graph_power(h, 3));
}
BENCHMARK(BM_GraphPower)->RangeMultiplier(2)->Range(64, 1024);

void BM_AllLeaflessRoots(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(1));
  Graph g = class_power(r, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_leafless_roots(g, r));
  state.counters["edges"] = static_cast<double>(g.edge_count());
  state.SetComplexityN(static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_AllLeaflessRoots)
    ->ArgsProduct({{80, 160, 320, 640}, {2}})
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllLeaflessRoots)->ArgsProduct({{80, 160, 320}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_Recognize(benchmark::State& state) {
  Graph g = class_power(2, static_cast<std::uint32_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g, 2));
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_Recognize)->RangeMultiplier(2)->Range(40, 320)->Unit(benchmark::kMillisecond);

void BM_TreeRoot(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto r = static_cast<std::uint32_t>(state.range(1));
  Graph g = graph_power(random_tree(static_cast<std::uint32_t>(state.range(0)), rng), r);
  for (auto _ : state) benchmark::DoNotOptimize(tree_root(g, r));
}
BENCHMARK(BM_TreeRoot)->ArgsProduct({{50, 100, 200}, {2, 3}})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
