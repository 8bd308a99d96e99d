#include "ordseason/special_functions.hpp"

#include "ordseason/errors.hpp"

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace ordseason {

double chi2_sf(double x, int df) {
  if (df < 1) throw InvalidInput("chi-squared degrees of freedom must be positive");
  if (std::isnan(x)) throw InvalidInput("chi-squared statistic is NaN");
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::gamma_q(0.5 * df, 0.5 * x);
}

double normal_sf(double z) {
  if (std::isnan(z)) throw InvalidInput("z statistic is NaN");
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

double binomial_two_sided_p(std::uint64_t k, std::uint64_t n, double p) {
  if (n == 0 || k > n) throw InvalidInput("binomial test needs 0 <= k <= n, n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("binomial rate must be in (0, 1)");
  const boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
  const double kd = static_cast<double>(k);
  const double lower = boost::math::cdf(dist, kd);
  const double upper = k == 0 ? 1.0 : boost::math::cdf(boost::math::complement(dist, kd - 1.0));
  return std::min(1.0, 2.0 * std::min(lower, upper));
}

double kolmogorov_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  // The alternating series converges slowly for tiny lambda where the tail is 1.
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidInput("Kolmogorov-Smirnov test needs two non-empty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  const double en = std::sqrt(nx * ny / (nx + ny));
  return {d, kolmogorov_sf((en + 0.12 + 0.11 / en) * d)};
}

}  // namespace ordseason
