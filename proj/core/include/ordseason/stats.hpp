#pragma once

#include "ordseason/patterns.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordseason {

inline constexpr std::array<double, 3> kSignificanceLevels{0.10, 0.05, 0.01};
inline constexpr double kDefaultAlpha = 0.05;
// Pearson asymptotics become unreliable below this expected count per cell.
inline constexpr double kMinExpectedCount = 5.0;

// a(day, position): how often `day` held rank `position` (0 = lowest value)
// within its window. Every row and every column sums to weeks().
class PositionMatrix {
 public:
  explicit PositionMatrix(int order = kDefaultOrder);
  // Rows are days. Throws InvalidInput unless square with equal row and column sums.
  static PositionMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  int order() const noexcept { return order_; }
  std::uint64_t weeks() const noexcept { return weeks_; }
  std::uint64_t at(int day, int position) const {
    return cells_.at(static_cast<std::size_t>(day * order_ + position));
  }
  std::vector<std::uint64_t> row(int day) const;
  std::vector<std::uint64_t> column(int position) const;
  std::vector<std::vector<std::uint64_t>> rows() const;

  void add_pattern(const OrdinalPattern& pattern, std::uint64_t count);

  bool operator==(const PositionMatrix&) const = default;

 private:
  int order_;
  std::uint64_t weeks_ = 0;
  std::vector<std::uint64_t> cells_;
};

PositionMatrix position_matrix(const PatternDistribution& dist);

// Extra context carried by binomial (z) outcomes.
struct BinomialDetail {
  double p_expected = 0.0;
  double p_observed = 0.0;
  std::uint64_t weeks = 0;
  double p_lower = 0.0;  // P[Z <= z]: observed frequency above expectation
  double p_upper = 0.0;  // P[Z >= z]: observed frequency below expectation
  // p_observed was 0 or 1; p_value is the exact binomial tail and statistic
  // is the score z with the null variance.
  bool degenerate = false;

  bool operator==(const BinomialDetail&) const = default;
};

struct TestOutcome {
  double statistic = 0.0;
  std::optional<int> df;  // empty for z-tests
  double p_value = 1.0;
  bool reject_10 = false;
  bool reject_05 = false;
  bool reject_01 = false;
  std::vector<double> observed;
  double expected = 0.0;  // per-cell expectation (chi-squared) or expected count (z)
  bool low_expected = false;
  std::optional<BinomialDetail> binomial;

  bool rejects(double alpha) const noexcept { return p_value < alpha; }
  // "", "*", "**" or "***" for the 10/5/1% levels.
  std::string stars() const;

  bool operator==(const TestOutcome&) const = default;
};

// Fills reject_* from p_value.
void set_decisions(TestOutcome& outcome);

// Pearson Q of observed against the uniform expectation total/len.
// Throws InvalidInput for fewer than two cells or a zero total.
double chi2_statistic(std::span<const double> observed);
double chi2_statistic(std::span<const std::uint64_t> observed);

// Goodness of fit against the uniform distribution, df = len - 1.
TestOutcome chi2_uniformity_test(std::span<const double> observed);
TestOutcome chi2_uniformity_test(std::span<const std::uint64_t> observed);

TestOutcome test_h1_pattern_uniformity(const PatternDistribution& dist);
std::vector<TestOutcome> test_h2_day_rows(const PositionMatrix& matrix);
std::vector<TestOutcome> test_h3_position_columns(const PositionMatrix& matrix);

struct BinomialTestInput {
  double p_expected = 0.0;
  double p_observed = 0.0;
  std::uint64_t weeks = 0;
};

// z = (p_e - p_o) / sqrt(p_o q_o / N). Negative z means the observed
// frequency exceeds the expected one. Throws DegenerateFrequency for
// p_o in {0, 1} and InvalidInput for N = 0.
double binomial_z(const BinomialTestInput& input);

// Two-sided test of an observed frequency against p_expected over `weeks`
// windows, via binomial_z. A degenerate frequency falls back to the exact
// binomial tail of round(p_observed * weeks) successes.
TestOutcome binomial_proportion_test(double p_expected, double p_observed, std::uint64_t weeks);
TestOutcome binomial_frequency_test(double p_expected, std::uint64_t successes, std::uint64_t weeks);

// Share of windows falling in a pattern family.
double family_frequency(const PatternDistribution& dist, PatternFamily family);
std::uint64_t family_count(const PatternDistribution& dist, PatternFamily family);
double family_expected_frequency(PatternFamily family, int order);

TestOutcome test_h4_monday_largest(const PatternDistribution& dist);
TestOutcome test_h5_monday_worst_friday_best(const PatternDistribution& dist);

}  // namespace ordseason
