#include "ordseason/errors.hpp"
#include "ordseason/fgn.hpp"
#include "ordseason/hurst.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ordseason;

namespace {

std::vector<double> noise(double h, std::uint64_t seed, std::size_t n = 10000) {
  return fgn_circulant({.hurst = h, .length = n, .seed = seed});
}

struct Band {
  double hurst;
  double tolerance;
};

// Every one of 100 seeded series must land inside the band.
void expect_all_within(HurstMethod method, Band band) {
  for (std::uint64_t r = 0; r < 100; ++r) {
    const double h = estimate_hurst(noise(band.hurst, replication_seed(7, r)), {.method = method}).h;
    EXPECT_NEAR(h, band.hurst, band.tolerance) << to_string(method) << " replication " << r;
  }
}

}  // namespace

TEST(HurstWindowGrid, LogSpacedAndStrictlyIncreasing) {
  const auto grid = hurst_window_grid(8, 2500, 1.5);
  ASSERT_GE(grid.size(), 8u);
  EXPECT_EQ(grid.front(), 8u);
  EXPECT_LE(grid.back(), 2500u);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_GT(grid[i], grid[i - 1]);
}

TEST(ExpectedRescaledRange, GrowsLikeSquareRoot) {
  EXPECT_GT(expected_rescaled_range(16), expected_rescaled_range(8));
  // Direct Anis-Lloyd-Peters sum in long double, no asymptotic switch.
  const auto reference = [](int n) {
    long double sum = 0.0L;
    for (int i = 1; i < n; ++i) sum += std::sqrt(static_cast<long double>(n - i) / i);
    const long double front =
        std::exp(std::lgamma(0.5L * (n - 1)) - std::lgamma(0.5L * n)) / std::sqrt(std::acos(-1.0L));
    return static_cast<double>((n - 0.5L) / n * front * sum);
  };
  for (int n : {8, 16, 50, 200, 340, 341, 1000, 4000}) {
    EXPECT_NEAR(expected_rescaled_range(n), reference(n), 1e-6 * reference(n)) << "n = " << n;
  }
  const double ratio = expected_rescaled_range(4000) / expected_rescaled_range(1000);
  EXPECT_GT(ratio, 1.9);
  EXPECT_LT(ratio, 2.1);
}

TEST(EstimateHurst, ScaleAndShiftInvariance) {
  const auto x = noise(0.6, 3);
  for (auto method : {HurstMethod::RescaledRange, HurstMethod::Dfa}) {
    const double h = estimate_hurst(x, {.method = method}).h;
    std::vector<double> scaled(x), shifted(x);
    for (auto& v : scaled) v *= 37.0;
    for (auto& v : shifted) v += 5.0;
    EXPECT_NEAR(estimate_hurst(scaled, {.method = method}).h, h, 1e-12);
    EXPECT_NEAR(estimate_hurst(shifted, {.method = method}).h, h, 1e-12);
  }
}

TEST(EstimateHurst, FitMetadata) {
  const auto e = estimate_hurst(noise(0.5, 4));
  EXPECT_EQ(e.method, HurstMethod::RescaledRange);
  EXPECT_GE(e.fit_points.size(), 4u);
  EXPECT_EQ(e.fit_points.size(), e.window_sizes.size());
  EXPECT_GT(e.r_squared, 0.9);
  EXPECT_TRUE(std::isfinite(e.h));
}

TEST(EstimateHurst, InputErrors) {
  EXPECT_THROW(estimate_hurst(std::vector<double>(20, 1.0)), InvalidInput);
  EXPECT_THROW(estimate_hurst(std::vector<double>(1000, 1.0)), DegenerateSeries);
  EXPECT_THROW(estimate_hurst(noise(0.5, 1, 1000), {.min_window = 4}), InvalidInput);
  EXPECT_THROW(estimate_hurst(noise(0.5, 1, 1000), {.max_window = 400}), InvalidInput);
  EXPECT_THROW(estimate_hurst(noise(0.5, 1, 1000), {.min_window = 64, .max_window = 32}), InvalidInput);
}

TEST(EstimateHurst, RescaledRangeWhiteNoiseBand) { expect_all_within(HurstMethod::RescaledRange, {0.5, 0.07}); }
TEST(EstimateHurst, RescaledRangePersistentBand) { expect_all_within(HurstMethod::RescaledRange, {0.7, 0.07}); }
TEST(EstimateHurst, RescaledRangeStrongPersistenceBand) { expect_all_within(HurstMethod::RescaledRange, {0.9, 0.08}); }
TEST(EstimateHurst, DfaWhiteNoiseBand) { expect_all_within(HurstMethod::Dfa, {0.5, 0.07}); }
TEST(EstimateHurst, DfaPersistentBand) { expect_all_within(HurstMethod::Dfa, {0.7, 0.07}); }
TEST(EstimateHurst, DfaStrongPersistenceBand) { expect_all_within(HurstMethod::Dfa, {0.9, 0.08}); }

TEST(EstimateHurst, MeanIncreasesWithTrueExponent) {
  for (auto method : {HurstMethod::RescaledRange, HurstMethod::Dfa}) {
    double previous = 0.0;
    for (int k = 1; k <= 9; ++k) {
      double mean = 0.0;
      for (std::uint64_t r = 0; r < 100; ++r) {
        mean += estimate_hurst(noise(k / 10.0, replication_seed(7, r)), {.method = method}).h / 100.0;
      }
      EXPECT_GT(mean, previous) << to_string(method) << " H=" << k / 10.0;
      previous = mean;
    }
  }
}
