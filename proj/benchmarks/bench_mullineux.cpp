#include <benchmark/benchmark.h>

#include "twistlab/mullineux.hpp"
#include "twistlab/search.hpp"

using namespace twistlab;

static void BM_MullineuxAllRegular(benchmark::State& state) {
  const Part d = static_cast<Part>(state.range(0));
  const auto shapes = enumerate_partitions(d, PartitionFilter::p_regular(5));
  for (auto _ : state) {
    for (const auto& lambda : shapes) benchmark::DoNotOptimize(mullineux_map(lambda, 5));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shapes.size()));
}
BENCHMARK(BM_MullineuxAllRegular)->Arg(15)->Arg(20)->Arg(25);

static void BM_MullineuxDeepTwist(benchmark::State& state) {
  const Partition lambda{29, 29, 24, 4, 4, 3, 3, 3, 2, 1};
  Part factor = 1;
  for (int i = 0; i < state.range(0); ++i) factor *= 7;
  const Partition twisted = scale(lambda, factor);
  for (auto _ : state) benchmark::DoNotOptimize(mullineux_map(twisted, 7));
}
BENCHMARK(BM_MullineuxDeepTwist)->DenseRange(1, 5);

static void BM_PersistenceScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_twist_persistence(20, 5, {static_cast<unsigned>(state.range(0))}));
  }
}
BENCHMARK(BM_PersistenceScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
