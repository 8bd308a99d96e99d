#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

// Independent reference computations for tests. Nothing here calls into the
// library under test.
namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                      double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

// Adaptive Simpson quadrature over [a, b], split into `pieces` panels so
// narrow peaks are not stepped over.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13,
                        int pieces = 64) {
  double total = 0.0;
  const double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h;
    const double hi = lo + h;
    const double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    total += simpson(f, lo, hi, flo, fmid, fhi, h / 6.0 * (flo + 4.0 * fmid + fhi), tol / pieces, 40);
  }
  return total;
}

// P[X > x] for chi-squared(df), integrating the density in u = sqrt(t) so the
// df = 1 singularity at zero disappears.
inline double chi2_sf(double x, int df) {
  const double k = df / 2.0;
  const double log_norm = -k * std::log(2.0) - std::lgamma(k);
  auto integrand = [&](double u) {
    if (u <= 0.0) return df == 1 ? 2.0 * std::exp(log_norm) : 0.0;
    const double t = u * u;
    return 2.0 * u * std::exp(log_norm + (k - 1.0) * std::log(t) - t / 2.0);
  };
  const double upper = std::sqrt(std::max(x, static_cast<double>(df)) + 40.0 * std::sqrt(2.0 * df) + 200.0);
  return integrate(integrand, std::sqrt(x), upper);
}

inline double normal_sf(double z) {
  auto phi = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI); };
  if (z >= 0.0) return integrate(phi, z, 40.0);
  return 1.0 - integrate(phi, -z, 40.0);
}

// All permutations of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::string digits_string(const std::vector<int>& p) {
  std::string s;
  for (int d : p) s += static_cast<char>('0' + d);
  return s;
}

// gamma(k) of unit-variance fractional Gaussian noise.
inline double fgn_gamma(double h, double k) {
  return 0.5 * (std::pow(std::abs(k + 1), 2 * h) - 2 * std::pow(std::abs(k), 2 * h) + std::pow(std::abs(k - 1), 2 * h));
}

inline double pearson_q(const std::vector<double>& observed) {
  const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
  const double expected = total / static_cast<double>(observed.size());
  double q = 0.0;
  for (double o : observed) q += (o - expected) * (o - expected) / expected;
  return q;
}

}  // namespace oracle
