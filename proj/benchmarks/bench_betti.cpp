#include <benchmark/benchmark.h>

#include "jackbetti/betti.hpp"
#include "jackbetti/ideals.hpp"

using namespace jb;

static void BM_KoszulBetti(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  const auto p = static_cast<std::uint64_t>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(betti::koszul_betti(n, m, p));
}
BENCHMARK(BM_KoszulBetti)->Args({6, 4, 0})->Args({7, 5, 0})->Args({7, 5, 2})->Unit(benchmark::kMillisecond);

static void BM_ConjecturalResolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(betti::conjectural_resolution(11, 5));
}
BENCHMARK(BM_ConjecturalResolution)->Unit(benchmark::kMillisecond);

static void BM_HilbertFunction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ideals::hilbert_function(1, 5, 7, 0, 8));
}
BENCHMARK(BM_HilbertFunction)->Unit(benchmark::kMillisecond);
