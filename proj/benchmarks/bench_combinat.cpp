#include <benchmark/benchmark.h>

#include "jackbetti/abacus.hpp"
#include "jackbetti/symfunc.hpp"

using namespace jb;

static void BM_PmTable(benchmark::State& state) {
  const combinat::Partition lam{4, 4, 3};
  for (auto _ : state) benchmark::DoNotOptimize(abacus::pm_table(lam, 5));
}
BENCHMARK(BM_PmTable);

static void BM_Lemma54(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = combinat::partitions_of(n);
  for (auto _ : state)
    for (const auto& lam : parts) benchmark::DoNotOptimize(symfunc::verify_lemma54(n, lam, 2));
}
BENCHMARK(BM_Lemma54)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
