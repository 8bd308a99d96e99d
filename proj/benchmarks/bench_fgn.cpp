#include "ordseason/fgn.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Circulant(benchmark::State& state) {
  ordseason::FgnConfig cfg{.hurst = 0.7, .length = static_cast<std::size_t>(state.range(0)), .seed = 3};
  for (auto _ : state) benchmark::DoNotOptimize(ordseason::fgn_circulant(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Circulant)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_Hosking(benchmark::State& state) {
  ordseason::FgnConfig cfg{.hurst = 0.7, .length = static_cast<std::size_t>(state.range(0)), .seed = 3};
  for (auto _ : state) benchmark::DoNotOptimize(ordseason::fgn_hosking(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hosking)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity(benchmark::oNSquared);

}  // namespace
