// Serial reference kernels against their OpenMP / incremental counterparts.

#include <benchmark/benchmark.h>

#include "sytb/hookwalk.hpp"
#include "sytb/maxcell_dist.hpp"
#include "sytb/promotion.hpp"
#include "sytb/tableau.hpp"

namespace {

using namespace sytb;

void BM_CornerSerial(benchmark::State& state) {
  const auto shape = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto h = corner_distribution_streams_serial(shape, 200000, 1, 16);
    benchmark::DoNotOptimize(h.total);
  }
}
BENCHMARK(BM_CornerSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CornerParallel(benchmark::State& state) {
  const auto shape = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto h = corner_distribution_parallel(shape, 200000, 1, 16);
    benchmark::DoNotOptimize(h.total);
  }
}
BENCHMARK(BM_CornerParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SampleSyt(benchmark::State& state) {
  const auto shape = staircase(static_cast<int>(state.range(0)));
  RandomStream rng(3, 0);
  for (auto _ : state) {
    auto t = sample_syt(shape, rng);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_SampleSyt)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SampleBatch(benchmark::State& state) {
  const auto shape = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto batch = sample_syt_batch(shape, 16, 5);
    benchmark::DoNotOptimize(batch.size());
  }
}
BENCHMARK(BM_SampleBatch)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ValidateSerial(benchmark::State& state) {
  RandomStream rng(7, 0);
  const auto t = sample_syt(staircase(static_cast<int>(state.range(0))), rng);
  for (auto _ : state) benchmark::DoNotOptimize(validate(t).ok);
}
BENCHMARK(BM_ValidateSerial)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ValidateParallel(benchmark::State& state) {
  RandomStream rng(7, 0);
  const auto t = sample_syt(staircase(static_cast<int>(state.range(0))), rng);
  for (auto _ : state) benchmark::DoNotOptimize(validate_parallel(t).ok);
}
BENCHMARK(BM_ValidateParallel)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_PromoteReference(benchmark::State& state) {
  RandomStream rng(11, 0);
  auto t = sample_syt(staircase(static_cast<int>(state.range(0))), rng);
  for (auto _ : state) {
    t = promote(t);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_PromoteReference)->Arg(50)->Arg(200);

void BM_PromoteEngine(benchmark::State& state) {
  RandomStream rng(11, 0);
  PromotionEngine engine(sample_syt(staircase(static_cast<int>(state.range(0))), rng));
  for (auto _ : state) benchmark::DoNotOptimize(engine.step());
}
BENCHMARK(BM_PromoteEngine)->Arg(50)->Arg(200)->Arg(1000);

void BM_PromoteEnginePipelined(benchmark::State& state) {
  RandomStream rng(11, 0);
  const int n = static_cast<int>(state.range(0));
  PromotionEngine engine(sample_syt(staircase(n), rng));
  std::vector<Letter> letters(static_cast<std::size_t>(n) * n);
  for (auto _ : state) {
    engine.run(letters);
    benchmark::DoNotOptimize(letters.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(letters.size()));
}
BENCHMARK(BM_PromoteEnginePipelined)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_PmfFloat(benchmark::State& state) {
  for (auto _ : state) {
    auto p = maxcell_pmf_float(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(p.probs.data());
  }
}
BENCHMARK(BM_PmfFloat)->Arg(3000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_PmfExact(benchmark::State& state) {
  for (auto _ : state) {
    auto p = maxcell_pmf_exact(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(p.probs.data());
  }
}
BENCHMARK(BM_PmfExact)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
