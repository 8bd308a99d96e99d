#pragma once

#include "ordseason/series.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ordseason {

struct FgnConfig {
  double hurst = 0.5;
  std::size_t length = 10000;
  double sigma = 1.0;  // standard deviation of one increment
  std::uint64_t seed = 0;

  // Throws InvalidInput unless 0 < hurst < 1, length >= 2, sigma > 0.
  void validate() const;
};

enum class FgnMethod {
  CirculantEmbedding,  // exact, O(n log n); Davies-Harte construction
  Hosking,             // exact, O(n^2); Durbin-Levinson conditional recursion
};

// gamma(k) = sigma^2/2 (|k+1|^2H - 2|k|^2H + |k-1|^2H)
double fgn_autocovariance(double hurst, std::size_t lag, double sigma = 1.0);

// Stationary fractional Gaussian noise. The circulant path falls back to the
// Hosking recursion (with a logged notice) if the embedding is not
// non-negative definite. Deterministic given cfg.seed.
ReturnSeries fgn_generate(const FgnConfig& cfg, FgnMethod method = FgnMethod::CirculantEmbedding);

std::vector<double> fgn_circulant(const FgnConfig& cfg);
std::vector<double> fgn_hosking(const FgnConfig& cfg);

// Cumulative sum: fractional Brownian motion sampled at 1..n with B(0) = 0.
std::vector<double> fbm_from_fgn(std::span<const double> noise);
std::vector<double> first_differences(std::span<const double> path);

// Seed for replication `index` derived from a master seed with splitmix64;
// independent of evaluation order.
std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t index);

}  // namespace ordseason
