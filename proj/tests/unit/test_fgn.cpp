#include "ordseason/errors.hpp"
#include "ordseason/fgn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace ordseason;

namespace {

double sample_autocovariance(const std::vector<double>& x, std::size_t lag) {
  // Known zero mean.
  double s = 0.0;
  for (std::size_t t = 0; t + lag < x.size(); ++t) s += x[t] * x[t + lag];
  return s / static_cast<double>(x.size() - lag);
}

}  // namespace

TEST(FgnAutocovariance, ClosedForm) {
  EXPECT_NEAR(fgn_autocovariance(0.9, 1), 0.74110, 5e-6);
  EXPECT_NEAR(fgn_autocovariance(0.1, 1), oracle::fgn_gamma(0.1, 1), 1e-12);
  EXPECT_NEAR(fgn_autocovariance(0.1, 1), -0.425651, 5e-6);
  EXPECT_DOUBLE_EQ(fgn_autocovariance(0.5, 0), 1.0);
  EXPECT_NEAR(fgn_autocovariance(0.5, 3), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(fgn_autocovariance(0.7, 2, 2.0), 4.0 * oracle::fgn_gamma(0.7, 2));
}

TEST(FgnGenerate, WhiteNoiseAtHalf) {
  const auto x = fgn_generate({.hurst = 0.5, .length = 100000, .seed = 1}).values;
  EXPECT_NEAR(sample_autocovariance(x, 1) / sample_autocovariance(x, 0), 0.0, 0.01);
}

TEST(FgnGenerate, LagOneCovariance) {
  const auto persistent = fgn_generate({.hurst = 0.9, .length = 100000, .seed = 2}).values;
  EXPECT_NEAR(sample_autocovariance(persistent, 1), 0.74110, 0.02);
  const auto anti = fgn_generate({.hurst = 0.1, .length = 100000, .seed = 2}).values;
  EXPECT_NEAR(sample_autocovariance(anti, 1), oracle::fgn_gamma(0.1, 1), 0.02);
}

TEST(FgnGenerate, DeterministicBySeedAndMethod) {
  const FgnConfig cfg{.hurst = 0.7, .length = 4096, .seed = 99};
  EXPECT_EQ(fgn_generate(cfg), fgn_generate(cfg));
  EXPECT_EQ(fgn_hosking(cfg), fgn_hosking(cfg));
  FgnConfig other = cfg;
  other.seed = 100;
  EXPECT_NE(fgn_generate(cfg).values, fgn_generate(other).values);
  EXPECT_EQ(fgn_generate(cfg).size(), 4096u);
  EXPECT_EQ(fgn_circulant({.hurst = 0.3, .length = 1000, .seed = 1}).size(), 1000u);
}

TEST(FgnGenerate, SigmaScalesTheSeries) {
  const auto unit = fgn_circulant({.hurst = 0.6, .length = 512, .sigma = 1.0, .seed = 4});
  const auto scaled = fgn_circulant({.hurst = 0.6, .length = 512, .sigma = 2.5, .seed = 4});
  for (std::size_t i = 0; i < unit.size(); ++i) EXPECT_NEAR(scaled[i], 2.5 * unit[i], 1e-12);
}

TEST(FgnGenerate, RejectsInvalidConfig) {
  EXPECT_THROW(fgn_generate({.hurst = 0.0}), InvalidInput);
  EXPECT_THROW(fgn_generate({.hurst = 1.0}), InvalidInput);
  EXPECT_THROW(fgn_generate({.hurst = 0.5, .length = 1}), InvalidInput);
  EXPECT_THROW(fgn_generate({.hurst = 0.5, .sigma = 0.0}), InvalidInput);
}

TEST(FgnGenerate, GaussianMarginals) {
  const auto x = fgn_generate({.hurst = 0.7, .length = 1000000, .seed = 12}).values;
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  EXPECT_NEAR(m3 / std::pow(m2, 1.5), 0.0, 0.05);
  EXPECT_NEAR(m4 / (m2 * m2) - 3.0, 0.0, 0.1);
}

TEST(FbmFromFgn, PartialSumsAndRoundTrip) {
  EXPECT_EQ(fbm_from_fgn(std::vector<double>{1, 1, 1}), (std::vector<double>{1, 2, 3}));
  const auto x = fgn_circulant({.hurst = 0.4, .length = 1000, .seed = 6});
  const auto back = first_differences(fbm_from_fgn(x));
  ASSERT_EQ(back.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(back[i], x[i], 1e-12);
}

TEST(FbmFromFgn, VarianceGrowsAsPowerOfTime) {
  constexpr std::size_t kReps = 500;
  const std::vector<std::size_t> horizons{8, 16, 32, 64, 128, 256, 512};
  std::vector<double> second_moment(horizons.size(), 0.0);
  for (std::size_t r = 0; r < kReps; ++r) {
    const auto path = fbm_from_fgn(fgn_circulant({.hurst = 0.7, .length = 512, .seed = replication_seed(31, r)}));
    for (std::size_t k = 0; k < horizons.size(); ++k) {
      const double b = path[horizons[k] - 1];
      second_moment[k] += b * b / kReps;
    }
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(horizons.size());
  for (std::size_t k = 0; k < horizons.size(); ++k) {
    const double lx = std::log(static_cast<double>(horizons[k]));
    const double ly = std::log(second_moment[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  EXPECT_NEAR(slope, 1.4, 0.1);
}

TEST(ReplicationSeed, DistinctAndStable) {
  EXPECT_EQ(replication_seed(1, 5), replication_seed(1, 5));
  EXPECT_NE(replication_seed(1, 5), replication_seed(1, 6));
  EXPECT_NE(replication_seed(1, 5), replication_seed(2, 5));
}
