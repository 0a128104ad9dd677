#include <benchmark/benchmark.h>

#include "budget_builder/detect.hpp"
#include "budget_builder/experiments.hpp"
#include "budget_builder/process.hpp"
#include "budget_builder/strategies.hpp"

using namespace bb;

namespace {

BuilderGraph revealed_graph(std::uint32_t n, std::uint64_t t, std::uint64_t seed) {
  Process p({n, t, 0, seed});
  while (!p.exhausted()) p.next_edge();
  return BuilderGraph::from_edges(n, p.history());
}

void BM_EdgeStream(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto t = pair_count(n) / 2;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Process p({n, t, 0, seed++});
    while (!p.exhausted()) benchmark::DoNotOptimize(p.next_edge());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t));
}
BENCHMARK(BM_EdgeStream)->Arg(200)->Arg(800);

void BM_CountTriangles(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto g = revealed_graph(n, 4 * static_cast<std::uint64_t>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_pattern(g, Pattern::triangle()));
}
BENCHMARK(BM_CountTriangles)->Arg(400)->Arg(1600);

void BM_ContainsFan(benchmark::State& state) {
  const auto g = revealed_graph(400, 6000, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contains_t_k(g, 3));
}
BENCHMARK(BM_ContainsFan);

void BM_DiamondCheck(benchmark::State& state) {
  const auto g = revealed_graph(400, 4000, 3);
  // A pair between two high-degree vertices that is not yet present.
  Edge e(0, 1);
  for (Vertex v = 1; g.has_edge(0, v); ++v) e = Edge(0, v + 1);
  for (auto _ : state) benchmark::DoNotOptimize(diamond_completing_check(g, e));
}
BENCHMARK(BM_DiamondCheck);

void BM_K4mShortTrial(benchmark::State& state) {
  const ProcessConfig base{400, 2000, 2560, 0};
  const auto spec = select_strategy(Pattern::k4_minus(), 400, 2000, 2560);
  const TargetDetector det(Pattern::k4_minus());
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ProcessConfig cfg = base;
    cfg.seed = seed++;
    auto s = make_strategy(spec, cfg);
    benchmark::DoNotOptimize(run_strategy(cfg, *s, &det).success);
  }
}
BENCHMARK(BM_K4mShortTrial);

void BM_TkShortTrial(benchmark::State& state) {
  const ProcessConfig base{400, 2000, 512, 0};
  const auto spec = select_strategy(Pattern::fan(2), 400, 2000, 512);
  const TargetDetector det(Pattern::fan(2));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ProcessConfig cfg = base;
    cfg.seed = seed++;
    auto s = make_strategy(spec, cfg);
    benchmark::DoNotOptimize(run_strategy(cfg, *s, &det).success);
  }
}
BENCHMARK(BM_TkShortTrial);

}  // namespace

BENCHMARK_MAIN();
