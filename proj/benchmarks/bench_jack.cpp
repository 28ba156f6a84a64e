#include <benchmark/benchmark.h>

#include "jackbetti/jack.hpp"
#include "jackbetti/operators.hpp"

using namespace jb;

static void BM_NonsymJackGeneric(benchmark::State& state) {
  const combinat::Composition mu{2, 0, 1, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(jack::nonsym_jack_generic(mu));
}
BENCHMARK(BM_NonsymJackGeneric)->Unit(benchmark::kMillisecond);

static void BM_NonsymJackSpecialized(benchmark::State& state) {
  const combinat::Composition mu{3, 2, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(jack::nonsym_jack(mu, exactnum::Rational(1, 2)));
}
BENCHMARK(BM_NonsymJackSpecialized)->Unit(benchmark::kMillisecond);

static void BM_SymJack(benchmark::State& state) {
  const combinat::Partition lam{8, 1};
  for (auto _ : state) benchmark::DoNotOptimize(jack::sym_jack(lam, 4, exactnum::Rational(3, 2)));
}
BENCHMARK(BM_SymJack)->Unit(benchmark::kMillisecond);

static void BM_Dunkl(benchmark::State& state) {
  auto f = jack::nonsym_jack({3, 2, 1, 0}, exactnum::Rational(1, 2)).poly;
  for (auto _ : state) benchmark::DoNotOptimize(poly::dunkl(f, 1, exactnum::Rational(1, 2)));
}
BENCHMARK(BM_Dunkl);
