#include <benchmark/benchmark.h>

#include "lfdb/arith/elliptic.hpp"
#include "lfdb/arith/primes.hpp"
#include "lfdb/lfunc/lfunction.hpp"

using namespace lfdb;

static void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::sieve_primes(limit));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_PointCount(benchmark::State& state) {
  const arith::EllipticCurveModel E({Integer(0), Integer(0), Integer(1), Integer(-7), Integer(6)}, Integer(5077));
  const auto primes = arith::sieve_primes(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto p : primes) benchmark::DoNotOptimize(arith::ec_ap(E, p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(primes.size()));
}
BENCHMARK(BM_PointCount)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

static void BM_CurveCoefficients(benchmark::State& state) {
  const arith::EllipticCurveModel E({Integer(0), Integer(0), Integer(1), Integer(-7), Integer(6)}, Integer(5077));
  const auto X = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lfunc::ec_lfunction(E, X));
}
BENCHMARK(BM_CurveCoefficients)->Arg(10'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
