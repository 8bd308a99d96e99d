#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ordseason {

enum class HurstMethod {
  RescaledRange,  // R/S over non-overlapping windows
  Dfa,            // detrended fluctuation analysis, linear detrending
};

struct HurstOptions {
  HurstMethod method = HurstMethod::RescaledRange;
  std::size_t min_window = 8;
  std::size_t max_window = 0;  // 0 = length / 4
  double growth = 1.5;         // ratio between consecutive window sizes
  // Divide R/S by its i.i.d. small-sample expectation (Anis-Lloyd with the
  // Peters factor) and rescale by sqrt(n), so white noise fits 0.5.
  bool small_sample_correction = true;
};

struct HurstEstimate {
  double h = 0.5;
  HurstMethod method = HurstMethod::RescaledRange;
  std::vector<std::size_t> window_sizes;
  std::vector<std::pair<double, double>> fit_points;  // (log size, log statistic)
  double r_squared = 0.0;

  bool operator==(const HurstEstimate&) const = default;
};

// Log-spaced window sizes from min_window to max_window.
std::vector<std::size_t> hurst_window_grid(std::size_t min_window, std::size_t max_window, double growth);

// Expected R/S of n i.i.d. Gaussian values (Anis-Lloyd-Peters).
double expected_rescaled_range(std::size_t n);

// Throws InvalidInput for too-short series or a bad window range and
// DegenerateSeries for a constant series.
HurstEstimate estimate_hurst(std::span<const double> series, const HurstOptions& options = {});

std::string_view to_string(HurstMethod method);

}  // namespace ordseason
