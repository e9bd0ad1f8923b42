#include <benchmark/benchmark.h>

#include "twistlab/homology.hpp"
#include "twistlab/specht.hpp"

using namespace twistlab;

static void BM_BuildSpecht(benchmark::State& state) {
  const Partition lambda{4, 3, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(build_specht(lambda, 2));
}
BENCHMARK(BM_BuildSpecht)->Unit(benchmark::kMillisecond);

static void BM_HookEndRing(benchmark::State& state) {
  const Part d = static_cast<Part>(state.range(0));
  const auto module = build_specht({d - 4, 1, 1, 1, 1}, 2);
  const Backend backend = state.range(1) ? Backend::Packed : Backend::Generic;
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(module, module, backend));
}
BENCHMARK(BM_HookEndRing)->Args({11, 0})->Args({11, 1})->Args({13, 0})->Args({13, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_Decomposable(benchmark::State& state) {
  const auto module = build_specht({4, 3, 1, 1}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_decomposable(module));
}
BENCHMARK(BM_Decomposable)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
