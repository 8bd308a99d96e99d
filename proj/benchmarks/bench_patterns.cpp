#include "ordseason/fgn.hpp"
#include "ordseason/patterns.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CountPatterns(benchmark::State& state) {
  const auto order = static_cast<int>(state.range(0));
  const auto series = ordseason::fgn_circulant({.hurst = 0.5, .length = 13550, .seed = 1});
  for (auto _ : state) {
    auto dist = ordseason::count_patterns(series, {.order = order});
    benchmark::DoNotOptimize(dist);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(series.size()));
}
BENCHMARK(BM_CountPatterns)->Arg(3)->Arg(5)->Arg(8);

void BM_UnrankRank(benchmark::State& state) {
  std::uint32_t id = 1;
  for (auto _ : state) {
    const auto p = ordseason::unrank_pattern({id}, 5);
    benchmark::DoNotOptimize(ordseason::rank_pattern(p));
    id = id % 120 + 1;
  }
}
BENCHMARK(BM_UnrankRank);

}  // namespace
