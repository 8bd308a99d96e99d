#include "ordseason/special_functions.hpp"
#include "ordseason/stats.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_Chi2Sf(benchmark::State& state) {
  const auto df = static_cast<double>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ordseason::chi2_sf(x, df));
    x = x < 300.0 ? x + 1.7 : 0.5;
  }
}
BENCHMARK(BM_Chi2Sf)->Arg(4)->Arg(119);

void BM_UniformityTest(benchmark::State& state) {
  std::vector<std::uint64_t> counts(120);
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = 15 + i % 7;
  for (auto _ : state) benchmark::DoNotOptimize(ordseason::chi2_uniformity_test(counts));
}
BENCHMARK(BM_UniformityTest);

}  // namespace
