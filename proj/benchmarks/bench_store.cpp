#include <benchmark/benchmark.h>

#include <random>

#include "lfdb/store/sortable.hpp"
#include "lfdb/store/store.hpp"

using namespace lfdb::store;

namespace {

std::unique_ptr<Store> synthetic_store(int n) {
  auto s = Store::in_memory();
  s->create_collection("bench", {{"n", IndexOrdering::Plain}, {"big", IndexOrdering::SortableBigInt}});
  std::mt19937_64 rng(5);
  WriteBatch batch;
  for (int i = 0; i < n; ++i) {
    Record r{"r" + std::to_string(i), {}};
    r.fields["n"] = Value(static_cast<std::int64_t>(rng() % 1000));
    r.fields["big"] = Value(std::to_string(rng() % 1'000'000'000'000ULL));
    batch.put(std::move(r));
  }
  s->apply("bench", batch);
  return s;
}

}  // namespace

static void BM_IndexedEquals(benchmark::State& state) {
  const auto s = synthetic_store(static_cast<int>(state.range(0)));
  std::int64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s->query("bench", {{Filter::equals("n", Value(k++ % 1000))}, {}, 0, 20}));
  }
}
BENCHMARK(BM_IndexedEquals)->Arg(10'000)->Arg(100'000);

static void BM_BigIntRangeSorted(benchmark::State& state) {
  const auto s = synthetic_store(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Query q{{Filter::range("big", Value("1000000000"), Value("50000000000"))}, "big", 0, 50};
    benchmark::DoNotOptimize(s->query("bench", q));
  }
}
BENCHMARK(BM_BigIntRangeSorted)->Arg(10'000)->Arg(100'000);

static void BM_SortableEncode(benchmark::State& state) {
  const std::string d(static_cast<std::size_t>(state.range(0)), '7');
  for (auto _ : state) benchmark::DoNotOptimize(encode_sortable_int(d));
}
BENCHMARK(BM_SortableEncode)->Arg(10)->Arg(1000);

static void BM_DumpText(benchmark::State& state) {
  const auto s = synthetic_store(10'000);
  for (auto _ : state) benchmark::DoNotOptimize(s->dump_text("bench"));
}
BENCHMARK(BM_DumpText)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
