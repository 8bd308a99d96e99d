#pragma once

#include <cstdint>
#include <span>

namespace ordseason {

// Upper tail P[X > x] of a chi-squared variable with df degrees of freedom,
// i.e. the regularized upper incomplete gamma function Q(df/2, x/2).
double chi2_sf(double x, int df);

// 1 - Phi(z) for the standard normal.
double normal_sf(double z);

// Two-sided exact binomial p-value for k successes in n trials at rate p.
double binomial_two_sided_p(std::uint64_t k, std::uint64_t n, double p);

// Survival function of the Kolmogorov distribution,
// P[sup|B(t)| > lambda] = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_sf(double lambda);

struct KsResult {
  double statistic = 0.0;  // sup |F1 - F2|
  double p_value = 1.0;
};

// Two-sample Kolmogorov-Smirnov test with the usual effective-size
// correction of the asymptotic p-value.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace ordseason
