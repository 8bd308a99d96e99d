#include "ordseason/fgn.hpp"

#include "ordseason/errors.hpp"
#include "ordseason/log.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

namespace ordseason {
namespace {

// FFTW planning is not thread-safe; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

ComplexBuffer make_buffer(std::size_t n) {
  auto* raw = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (raw == nullptr) throw std::bad_alloc();
  return ComplexBuffer(raw);
}

// In-place forward transform of an fftw_malloc'd buffer. Using the same flags
// and aligned storage every time keeps results bit-identical across calls.
void forward_fft(fftw_complex* data, std::size_t n) {
  fftw_plan plan;
  {
    const std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  const std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Davies-Harte. Embeds the covariance of `half + 1` points in a circulant of
// size 2*half (a power of two) and returns std::nullopt if any eigenvalue is
// materially negative.
std::optional<std::vector<double>> circulant_sample(const FgnConfig& cfg) {
  const std::size_t m = std::max<std::size_t>(2, next_pow2(2 * (cfg.length - 1)));
  const std::size_t half = m / 2;

  auto buf = make_buffer(m);
  for (std::size_t k = 0; k <= half; ++k) {
    buf[k][0] = fgn_autocovariance(cfg.hurst, k, cfg.sigma);
    buf[k][1] = 0.0;
  }
  for (std::size_t k = half + 1; k < m; ++k) {
    buf[k][0] = buf[m - k][0];
    buf[k][1] = 0.0;
  }
  forward_fft(buf.get(), m);

  std::vector<double> eigen(m);
  double largest = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    eigen[k] = buf[k][0];
    largest = std::max(largest, std::abs(eigen[k]));
  }
  for (double& e : eigen) {
    if (e < -1e-10 * largest) return std::nullopt;
    e = std::max(e, 0.0);
  }

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double md = static_cast<double>(m);
  buf[0][0] = std::sqrt(eigen[0] / md) * normal(rng);
  buf[0][1] = 0.0;
  buf[half][0] = std::sqrt(eigen[half] / md) * normal(rng);
  buf[half][1] = 0.0;
  for (std::size_t k = 1; k < half; ++k) {
    const double scale = std::sqrt(eigen[k] / (2.0 * md));
    const double re = scale * normal(rng);
    const double im = scale * normal(rng);
    buf[k][0] = re;
    buf[k][1] = im;
    buf[m - k][0] = re;
    buf[m - k][1] = -im;
  }
  forward_fft(buf.get(), m);

  std::vector<double> out(cfg.length);
  for (std::size_t t = 0; t < cfg.length; ++t) out[t] = buf[t][0];
  return out;
}

}  // namespace

void FgnConfig::validate() const {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw InvalidInput("Hurst exponent must lie in (0, 1), got " + std::to_string(hurst));
  }
  if (length < 2) throw InvalidInput("fGn length must be at least 2");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidInput("sigma must be positive");
}

double fgn_autocovariance(double hurst, std::size_t lag, double sigma) {
  const double k = static_cast<double>(lag);
  const double two_h = 2.0 * hurst;
  const double below = lag == 0 ? 1.0 : std::pow(k - 1.0, two_h);
  return 0.5 * sigma * sigma * (std::pow(k + 1.0, two_h) - 2.0 * std::pow(k, two_h) + below);
}

std::vector<double> fgn_circulant(const FgnConfig& cfg) {
  cfg.validate();
  auto sample = circulant_sample(cfg);
  if (!sample) {
    std::ostringstream msg;
    msg << "circulant embedding not non-negative definite for H=" << cfg.hurst
        << ", n=" << cfg.length << "; falling back to the Hosking recursion";
    log::info(msg.str());
    return fgn_hosking(cfg);
  }
  return std::move(*sample);
}

std::vector<double> fgn_hosking(const FgnConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.length;
  std::vector<double> gamma(n);
  for (std::size_t k = 0; k < n; ++k) gamma[k] = fgn_autocovariance(cfg.hurst, k, cfg.sigma);

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<double> x(n);
  std::vector<double> phi;  // partial regression coefficients of the current step
  std::vector<double> next;
  phi.reserve(n);
  next.reserve(n);
  double variance = gamma[0];
  x[0] = std::sqrt(variance) * normal(rng);
  for (std::size_t t = 1; t < n; ++t) {
    // Durbin-Levinson update for the order-t predictor.
    double num = gamma[t];
    for (std::size_t j = 0; j + 1 < t; ++j) num -= phi[j] * gamma[t - 1 - j];
    const double reflection = num / variance;
    next.assign(t, 0.0);
    for (std::size_t j = 0; j + 1 < t; ++j) next[j] = phi[j] - reflection * phi[t - 2 - j];
    next[t - 1] = reflection;
    phi.swap(next);
    variance *= (1.0 - reflection * reflection);

    double mean = 0.0;
    for (std::size_t j = 0; j < t; ++j) mean += phi[j] * x[t - 1 - j];
    x[t] = mean + std::sqrt(variance) * normal(rng);
  }
  return x;
}

ReturnSeries fgn_generate(const FgnConfig& cfg, FgnMethod method) {
  ReturnSeries series;
  series.values = method == FgnMethod::Hosking ? fgn_hosking(cfg) : fgn_circulant(cfg);
  std::ostringstream label;
  label << "fgn(H=" << cfg.hurst << ",seed=" << cfg.seed << ")";
  series.label = label.str();
  return series;
}

std::vector<double> fbm_from_fgn(std::span<const double> noise) {
  std::vector<double> path(noise.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < noise.size(); ++i) {
    sum += noise[i];
    path[i] = sum;
  }
  return path;
}

std::vector<double> first_differences(std::span<const double> path) {
  std::vector<double> diff(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) diff[i] = i == 0 ? path[0] : path[i] - path[i - 1];
  return diff;
}

std::uint64_t replication_seed(std::uint64_t master_seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(master_seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

}  // namespace ordseason
