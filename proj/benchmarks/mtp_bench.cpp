#include <benchmark/benchmark.h>

#include "mtp/enumerate.hpp"
#include "mtp/lemmas.hpp"
#include "mtp/tiler.hpp"
#include "mtp/verify.hpp"

namespace {

void BM_CountSignatures(benchmark::State& state) {
  const mtp::EnumBounds b{state.range(0), 2, state.range(1), 6, std::nullopt, std::nullopt};
  std::uint64_t n = 0;
  for (auto _ : state) {
    n = mtp::count_signatures(b);
    benchmark::DoNotOptimize(n);
  }
  state.counters["signatures"] = static_cast<double>(n);
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_CountSignatures)->Args({3, 30})->Args({4, 30})->Unit(benchmark::kMillisecond);

void BM_DeltaAndClassify(benchmark::State& state) {
  const auto sigs = mtp::enumerate_signatures({4, 2, 24, 6, std::nullopt, std::nullopt});
  for (auto _ : state) {
    for (const auto& s : sigs) {
      benchmark::DoNotOptimize(mtp::delta(s));
      benchmark::DoNotOptimize(mtp::assess(s));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(sigs.size()) * state.iterations());
}
BENCHMARK(BM_DeltaAndClassify)->Unit(benchmark::kMillisecond);

void BM_AuditorObserve(benchmark::State& state) {
  const auto sigs = mtp::enumerate_signatures({4, 2, 24, 6, std::nullopt, std::nullopt});
  const mtp::ExactInt k(4);
  for (auto _ : state) {
    mtp::SweepAuditor a;
    for (const auto& s : sigs) a.observe(s, k);
    benchmark::DoNotOptimize(a.signatures());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(sigs.size()) * state.iterations());
}
BENCHMARK(BM_AuditorObserve)->Unit(benchmark::kMillisecond);

void BM_RealizeFamily(benchmark::State& state) {
  const auto sig = mtp::conjectured_family(mtp::ExactInt(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mtp::realize(sig, {}));
}
BENCHMARK(BM_RealizeFamily)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_RealizeUntileable(benchmark::State& state) {
  const auto sig = mtp::make_signature(10, {{1, 1}, {3, 11}});
  for (auto _ : state) benchmark::DoNotOptimize(mtp::realize(sig, {}));
}
BENCHMARK(BM_RealizeUntileable)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
