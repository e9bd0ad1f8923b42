#include <benchmark/benchmark.h>

#include <random>

#include "twistlab/bit_matrix.hpp"
#include "twistlab/gf_matrix.hpp"

using namespace twistlab::linalg;

namespace {

GfMatrix random_matrix(Entry p, std::size_t n) {
  std::mt19937_64 rng(n * 31 + p);
  std::uniform_int_distribution<Entry> entry(0, p - 1);
  GfMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, entry(rng));
  }
  return m;
}

}  // namespace

static void BM_GenericRank(benchmark::State& state) {
  auto m = random_matrix(static_cast<Entry>(state.range(1)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_GenericRank)->Args({128, 2})->Args({512, 2})->Args({512, 3})->Unit(benchmark::kMicrosecond);

static void BM_PackedRank(benchmark::State& state) {
  BitMatrix m(random_matrix(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_PackedRank)->Arg(128)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

static void BM_GenericProduct(benchmark::State& state) {
  auto a = random_matrix(3, static_cast<std::size_t>(state.range(0)));
  auto b = random_matrix(3, static_cast<std::size_t>(state.range(0)) + 1);
  auto c = GfMatrix(3, a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, b.get(i, j));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * c);
}
BENCHMARK(BM_GenericProduct)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_PackedProduct(benchmark::State& state) {
  BitMatrix a(random_matrix(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_PackedProduct)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
