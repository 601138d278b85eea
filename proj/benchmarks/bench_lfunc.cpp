#include <benchmark/benchmark.h>

#include "lfdb/lfunc/lfunction.hpp"
#include "lfdb/lfunc/zeros.hpp"
#include "lfdb/lfunc/zeta.hpp"

using namespace lfdb::lfunc;

static void BM_ZetaOnCriticalLine(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_em(Complex(0.5, t)));
}
BENCHMARK(BM_ZetaOnCriticalLine)->Arg(10)->Arg(50)->Arg(100);

static void BM_ZetaZerosTo(benchmark::State& state) {
  const auto Z = riemann_zeta(10);
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(Z, 0.0, T));
}
BENCHMARK(BM_ZetaZerosTo)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ZetaZerosParallel(benchmark::State& state) {
  const auto Z = riemann_zeta(10);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros_parallel(Z, 0.0, 100.0, kDefaultZeroStep, threads));
}
BENCHMARK(BM_ZetaZerosParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_PrimeRace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prime_race(4, 1'000'000));
}
BENCHMARK(BM_PrimeRace)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
