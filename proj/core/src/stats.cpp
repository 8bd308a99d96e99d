#include "ordseason/stats.hpp"

#include "ordseason/errors.hpp"
#include "ordseason/log.hpp"
#include "ordseason/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

namespace ordseason {
namespace {

const std::vector<PatternId>& cached_family(PatternFamily family, int order) {
  static std::mutex mutex;
  static std::map<std::pair<PatternFamily, int>, std::vector<PatternId>> cache;
  const std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({family, order});
  if (inserted) it->second = pattern_family(family, order);
  return it->second;
}

std::vector<double> to_doubles(std::span<const std::uint64_t> counts) {
  return {counts.begin(), counts.end()};
}

TestOutcome family_test(const PatternDistribution& dist, PatternFamily family) {
  if (dist.windows() == 0) throw InvalidInput("pattern distribution has no windows");
  return binomial_frequency_test(family_expected_frequency(family, dist.order()),
                                 family_count(dist, family), dist.windows());
}

}  // namespace

PositionMatrix::PositionMatrix(int order) : order_(order) {
  if (order < kMinOrder || order > kMaxOrder) throw InvalidInput("invalid position matrix order");
  cells_.assign(static_cast<std::size_t>(order * order), 0);
}

PositionMatrix PositionMatrix::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  PositionMatrix m(static_cast<int>(rows.size()));
  const auto n = rows.size();
  std::vector<std::uint64_t> col_sums(n, 0);
  std::uint64_t weeks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidInput("position matrix must be square");
    const std::uint64_t row_sum = std::accumulate(rows[i].begin(), rows[i].end(), std::uint64_t{0});
    if (i == 0) weeks = row_sum;
    if (row_sum != weeks) throw InvalidInput("position matrix rows must share one total");
    for (std::size_t j = 0; j < n; ++j) {
      m.cells_[i * n + j] = rows[i][j];
      col_sums[j] += rows[i][j];
    }
  }
  for (std::uint64_t s : col_sums) {
    if (s != weeks) throw InvalidInput("position matrix column totals must equal row totals");
  }
  m.weeks_ = weeks;
  return m;
}

std::vector<std::uint64_t> PositionMatrix::row(int day) const {
  std::vector<std::uint64_t> r(static_cast<std::size_t>(order_));
  for (int j = 0; j < order_; ++j) r[j] = at(day, j);
  return r;
}

std::vector<std::uint64_t> PositionMatrix::column(int position) const {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) c[i] = at(i, position);
  return c;
}

std::vector<std::vector<std::uint64_t>> PositionMatrix::rows() const {
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out.push_back(row(i));
  return out;
}

void PositionMatrix::add_pattern(const OrdinalPattern& pattern, std::uint64_t count) {
  if (pattern.order() != order_) throw InvalidInput("pattern order does not match the matrix");
  for (int j = 0; j < order_; ++j) {
    cells_[static_cast<std::size_t>(pattern[j] * order_ + j)] += count;
  }
  weeks_ += count;
}

PositionMatrix position_matrix(const PatternDistribution& dist) {
  PositionMatrix m(dist.order());
  const auto counts = dist.counts();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    m.add_pattern(unrank_pattern({static_cast<std::uint32_t>(k + 1)}, dist.order()), counts[k]);
  }
  return m;
}

std::string TestOutcome::stars() const {
  if (reject_01) return "***";
  if (reject_05) return "**";
  if (reject_10) return "*";
  return "";
}

void set_decisions(TestOutcome& outcome) {
  outcome.reject_10 = outcome.rejects(kSignificanceLevels[0]);
  outcome.reject_05 = outcome.rejects(kSignificanceLevels[1]);
  outcome.reject_01 = outcome.rejects(kSignificanceLevels[2]);
}

double chi2_statistic(std::span<const double> observed) {
  if (observed.size() < 2) throw InvalidInput("chi-squared test needs at least two cells");
  double total = 0.0;
  for (double v : observed) {
    if (!std::isfinite(v) || v < 0.0) throw InvalidInput("observed counts must be finite and non-negative");
    total += v;
  }
  if (total <= 0.0) throw InvalidInput("chi-squared test needs a positive total");
  const double expected = total / static_cast<double>(observed.size());
  double q = 0.0;
  for (double v : observed) q += (v - expected) * (v - expected) / expected;
  return q;
}

double chi2_statistic(std::span<const std::uint64_t> observed) {
  const auto values = to_doubles(observed);
  return chi2_statistic(std::span<const double>(values));
}

TestOutcome chi2_uniformity_test(std::span<const double> observed) {
  TestOutcome out;
  out.statistic = chi2_statistic(observed);
  out.df = static_cast<int>(observed.size()) - 1;
  out.p_value = chi2_sf(out.statistic, *out.df);
  out.observed.assign(observed.begin(), observed.end());
  out.expected = std::accumulate(observed.begin(), observed.end(), 0.0) / static_cast<double>(observed.size());
  out.low_expected = out.expected < kMinExpectedCount;
  if (out.low_expected) {
    log::warn("expected count per cell is " + std::to_string(out.expected) +
              " (< 5); chi-squared p-values are unreliable");
  }
  set_decisions(out);
  return out;
}

TestOutcome chi2_uniformity_test(std::span<const std::uint64_t> observed) {
  const auto values = to_doubles(observed);
  return chi2_uniformity_test(std::span<const double>(values));
}

TestOutcome test_h1_pattern_uniformity(const PatternDistribution& dist) {
  if (dist.windows() == 0) throw InvalidInput("pattern distribution has no windows");
  return chi2_uniformity_test(dist.counts());
}

std::vector<TestOutcome> test_h2_day_rows(const PositionMatrix& matrix) {
  std::vector<TestOutcome> out;
  for (int day = 0; day < matrix.order(); ++day) out.push_back(chi2_uniformity_test(matrix.row(day)));
  return out;
}

std::vector<TestOutcome> test_h3_position_columns(const PositionMatrix& matrix) {
  std::vector<TestOutcome> out;
  for (int pos = 0; pos < matrix.order(); ++pos) out.push_back(chi2_uniformity_test(matrix.column(pos)));
  return out;
}

double binomial_z(const BinomialTestInput& input) {
  if (input.weeks == 0) throw InvalidInput("binomial test needs at least one week");
  if (!(input.p_expected > 0.0 && input.p_expected < 1.0)) {
    throw InvalidInput("expected frequency must be in (0, 1)");
  }
  if (!(input.p_observed > 0.0 && input.p_observed < 1.0)) {
    throw DegenerateFrequency("observed frequency " + std::to_string(input.p_observed) +
                              " leaves the normal approximation undefined");
  }
  const double q_observed = 1.0 - input.p_observed;
  return (input.p_expected - input.p_observed) /
         std::sqrt(input.p_observed * q_observed / static_cast<double>(input.weeks));
}

TestOutcome binomial_proportion_test(double p_expected, double p_observed, std::uint64_t weeks) {
  if (weeks == 0) throw InvalidInput("binomial test needs at least one week");
  if (!(p_observed >= 0.0 && p_observed <= 1.0)) throw InvalidInput("observed frequency must be in [0, 1]");
  BinomialDetail detail;
  detail.p_expected = p_expected;
  detail.p_observed = p_observed;
  detail.weeks = weeks;
  const double n = static_cast<double>(weeks);

  TestOutcome out;
  try {
    out.statistic = binomial_z({p_expected, p_observed, weeks});
    detail.p_lower = 1.0 - normal_sf(out.statistic);
    detail.p_upper = normal_sf(out.statistic);
    out.p_value = std::min(1.0, 2.0 * std::min(detail.p_lower, detail.p_upper));
  } catch (const DegenerateFrequency&) {
    detail.degenerate = true;
    out.statistic = (p_expected - p_observed) / std::sqrt(p_expected * (1.0 - p_expected) / n);
    detail.p_lower = 1.0 - normal_sf(out.statistic);
    detail.p_upper = normal_sf(out.statistic);
    const auto successes = static_cast<std::uint64_t>(std::llround(p_observed * n));
    out.p_value = binomial_two_sided_p(successes, weeks, p_expected);
    log::info("binomial test on a degenerate frequency; reporting the exact binomial tail");
  }
  out.observed = {p_observed * n};
  out.expected = p_expected * n;
  out.binomial = detail;
  set_decisions(out);
  return out;
}

TestOutcome binomial_frequency_test(double p_expected, std::uint64_t successes, std::uint64_t weeks) {
  if (weeks == 0) throw InvalidInput("binomial test needs at least one week");
  if (successes > weeks) throw InvalidInput("more successes than weeks");
  return binomial_proportion_test(p_expected, static_cast<double>(successes) / static_cast<double>(weeks),
                                  weeks);
}

std::uint64_t family_count(const PatternDistribution& dist, PatternFamily family) {
  std::uint64_t total = 0;
  for (PatternId id : cached_family(family, dist.order())) total += dist.count(id);
  return total;
}

double family_frequency(const PatternDistribution& dist, PatternFamily family) {
  if (dist.windows() == 0) throw InvalidInput("pattern distribution has no windows");
  return static_cast<double>(family_count(dist, family)) / static_cast<double>(dist.windows());
}

double family_expected_frequency(PatternFamily family, int order) {
  const double d = order;
  return family == PatternFamily::MondayLargest ? 1.0 / d : 1.0 / (d * (d - 1.0));
}

TestOutcome test_h4_monday_largest(const PatternDistribution& dist) {
  return family_test(dist, PatternFamily::MondayLargest);
}

TestOutcome test_h5_monday_worst_friday_best(const PatternDistribution& dist) {
  return family_test(dist, PatternFamily::MondayWorstFridayBest);
}

}  // namespace ordseason
