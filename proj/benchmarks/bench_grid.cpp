#include <benchmark/benchmark.h>

#include "orbitspace/grid_dynamics.hpp"

using namespace orbitspace;

namespace {

void BM_DoubleWell(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  const BoxGrid grid{builtin_domain("double-well"), res, res};
  const auto field = *builtin_field("double-well");
  for (auto _ : state) benchmark::DoNotOptimize(grid_morse_graph(build_box_map(field, grid)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.box_count()));
}
BENCHMARK(BM_DoubleWell)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CenterMorseGraphOnly(benchmark::State& state) {
  const BoxGrid grid{builtin_domain("center"), 64, 64};
  const auto map = build_box_map(*builtin_field("center"), grid);
  for (auto _ : state) benchmark::DoNotOptimize(grid_morse_graph(map));
}
BENCHMARK(BM_CenterMorseGraphOnly)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
