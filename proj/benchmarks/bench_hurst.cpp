#include "ordseason/fgn.hpp"
#include "ordseason/hurst.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EstimateHurst(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? ordseason::HurstMethod::RescaledRange : ordseason::HurstMethod::Dfa;
  const auto series = ordseason::fgn_circulant({.hurst = 0.6, .length = 13550, .seed = 5});
  for (auto _ : state) benchmark::DoNotOptimize(ordseason::estimate_hurst(series, {.method = method}));
  state.SetLabel(std::string(ordseason::to_string(method)));
}
BENCHMARK(BM_EstimateHurst)->Arg(0)->Arg(1);

}  // namespace
