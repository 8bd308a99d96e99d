#include "ordseason/hurst.hpp"

#include "ordseason/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ordseason {
namespace {

// Mean R/S over the complete non-overlapping windows of size n.
double rescaled_range(std::span<const double> x, std::size_t n) {
  const std::size_t windows = x.size() / n;
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t w = 0; w < windows; ++w) {
    const auto seg = x.subspan(w * n, n);
    double mean = 0.0;
    for (double v : seg) mean += v;
    mean /= static_cast<double>(n);
    double dev = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double ss = 0.0;
    for (double v : seg) {
      dev += v - mean;
      lo = std::min(lo, dev);
      hi = std::max(hi, dev);
      ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n));
    if (sd > 0.0) {
      sum += (hi - lo) / sd;
      ++used;
    }
  }
  return used == 0 ? 0.0 : sum / static_cast<double>(used);
}

// Root-mean-square residual of the integrated profile after a per-window
// least-squares line, over complete non-overlapping windows of size n.
double dfa_fluctuation(std::span<const double> profile, std::size_t n) {
  const std::size_t windows = profile.size() / n;
  const double nd = static_cast<double>(n);
  // Abscissae 0..n-1: closed forms for their mean and centered sum of squares.
  const double t_mean = (nd - 1.0) / 2.0;
  const double t_ss = nd * (nd * nd - 1.0) / 12.0;
  double total = 0.0;
  for (std::size_t w = 0; w < windows; ++w) {
    const auto seg = profile.subspan(w * n, n);
    double y_mean = 0.0;
    for (double v : seg) y_mean += v;
    y_mean /= nd;
    double sty = 0.0;
    for (std::size_t t = 0; t < n; ++t) sty += (static_cast<double>(t) - t_mean) * (seg[t] - y_mean);
    const double slope = sty / t_ss;
    double ss = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const double r = seg[t] - y_mean - slope * (static_cast<double>(t) - t_mean);
      ss += r * r;
    }
    total += ss / nd;
  }
  return std::sqrt(total / static_cast<double>(windows));
}

struct Fit {
  double slope;
  double r_squared;
};

Fit least_squares(const std::vector<std::pair<double, double>>& pts) {
  const double n = static_cast<double>(pts.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return {slope, r2};
}

}  // namespace

std::vector<std::size_t> hurst_window_grid(std::size_t min_window, std::size_t max_window, double growth) {
  if (!(growth > 1.0)) throw InvalidInput("window growth factor must exceed 1");
  std::vector<std::size_t> sizes;
  for (double s = static_cast<double>(min_window); s <= static_cast<double>(max_window) + 1e-9; s *= growth) {
    const auto n = static_cast<std::size_t>(std::llround(s));
    if (n > max_window) break;
    if (sizes.empty() || n > sizes.back()) sizes.push_back(n);
  }
  return sizes;
}

double expected_rescaled_range(std::size_t n) {
  if (n < 2) throw InvalidInput("expected R/S needs n >= 2");
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) sum += std::sqrt((nd - static_cast<double>(i)) / static_cast<double>(i));
  // Gamma ratio in log space so large n does not overflow.
  const double lead = std::exp(std::lgamma((nd - 1.0) / 2.0) - std::lgamma(nd / 2.0)) / std::sqrt(std::numbers::pi);
  return (nd - 0.5) / nd * lead * sum;
}

HurstEstimate estimate_hurst(std::span<const double> series, const HurstOptions& options) {
  const std::size_t len = series.size();
  const std::size_t min_window = options.min_window;
  const std::size_t max_window = options.max_window == 0 ? len / 4 : options.max_window;
  if (min_window < 8) throw InvalidInput("minimum window must be at least 8");
  if (len < 4 * min_window) {
    throw InvalidInput("series of length " + std::to_string(len) + " is too short for Hurst estimation");
  }
  if (max_window <= min_window || max_window > len / 4) {
    throw InvalidInput("window range must satisfy min < max <= length/4");
  }
  for (double v : series) {
    if (!std::isfinite(v)) throw InvalidInput("series holds a non-finite value");
  }
  if (std::all_of(series.begin(), series.end(), [&](double v) { return v == series.front(); })) {
    throw DegenerateSeries("constant series has no defined Hurst exponent");
  }

  HurstEstimate est;
  est.method = options.method;
  est.window_sizes = hurst_window_grid(min_window, max_window, options.growth);
  if (est.window_sizes.size() < 4) throw InvalidInput("fewer than 4 window sizes in range");

  std::vector<double> profile;
  if (options.method == HurstMethod::Dfa) {
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(len);
    profile.resize(len);
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      acc += series[i] - mean;
      profile[i] = acc;
    }
  }

  std::vector<std::pair<double, double>> fit;
  for (std::size_t n : est.window_sizes) {
    double stat = 0.0;
    if (options.method == HurstMethod::RescaledRange) {
      stat = rescaled_range(series, n);
      // Scaled by sqrt(n) so the slope is H itself: i.i.d. noise then fits 0.5.
      if (stat > 0.0 && options.small_sample_correction) {
        stat *= std::sqrt(static_cast<double>(n)) / expected_rescaled_range(n);
      }
    } else {
      stat = dfa_fluctuation(profile, n);
    }
    if (!(stat > 0.0)) continue;
    est.fit_points.emplace_back(std::log(static_cast<double>(n)), std::log(stat));
  }
  if (est.fit_points.size() < 4) throw DegenerateSeries("too few windows with non-zero spread");

  const Fit f = least_squares(est.fit_points);
  est.h = f.slope;
  est.r_squared = f.r_squared;
  return est;
}

std::string_view to_string(HurstMethod method) {
  switch (method) {
    case HurstMethod::RescaledRange: return "rs";
    case HurstMethod::Dfa: return "dfa";
  }
  return "unknown";
}

}  // namespace ordseason
