#include <benchmark/benchmark.h>

#include "incrtree/additive.hpp"
#include "incrtree/grow.hpp"
#include "incrtree/simulate.hpp"
#include "incrtree/stats.hpp"

using namespace incrtree;

namespace {

void BM_GrowDary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  DaryGrower grower;
  IncreasingTree t;
  for (auto _ : state) {
    grower.grow(t, 2, n, rng);
    benchmark::DoNotOptimize(t.size());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GrowDary)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_GrowGport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  GportGrower grower;
  IncreasingTree t;
  for (auto _ : state) {
    grower.grow(t, 1.0, n, rng);
    benchmark::DoNotOptimize(t.size());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GrowGport)->Arg(1000)->Arg(10000);

void BM_TollPass(benchmark::State& state, const TollPtr& toll) {
  const int n = 10000;
  Rng rng(2);
  const IncreasingTree t = grow_dary(2, n, rng);
  std::vector<double> scratch;
  for (auto _ : state)
    benchmark::DoNotOptimize(additive_total(*toll, t, scratch));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK_CAPTURE(BM_TollPass, leaf, make_leaf_toll());
BENCHMARK_CAPTURE(BM_TollPass, log_root_subtrees, make_log_root_subtrees_toll());
BENCHMARK_CAPTURE(BM_TollPass, log_branch_symmetry,
                  make_log_branch_symmetry_toll());
BENCHMARK_CAPTURE(BM_TollPass, orbits, make_orbits_toll());

void BM_SimulateLeaf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto result = simulate(ModelParams::make_dary(2), *make_leaf_toll(),
                                 n, 200, 7);
    benchmark::DoNotOptimize(result.stats.mean());
  }
  state.SetItemsProcessed(state.iterations() * 200 * n);
}
BENCHMARK(BM_SimulateLeaf)->Arg(1000)->Arg(10000);

void BM_StatsPush(benchmark::State& state) {
  SampleStats stats;
  double x = 0.5;
  for (auto _ : state) {
    stats.push(x);
    x = -x + 0.25;
  }
  benchmark::DoNotOptimize(stats.mean());
}
BENCHMARK(BM_StatsPush);

}  // namespace

BENCHMARK_MAIN();
