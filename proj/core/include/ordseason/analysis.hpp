#pragma once

#include "ordseason/hurst.hpp"
#include "ordseason/patterns.hpp"
#include "ordseason/series.hpp"
#include "ordseason/stats.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordseason {

enum class WeekMode {
  Block,     // consecutive `order`-tuples irrespective of the calendar
  Calendar,  // complete Monday..Friday ISO weeks only
};

struct AnalysisOptions {
  int order = kDefaultOrder;
  int stride = 0;  // 0 = order
  TieRule tie_rule = TieRule::EarlierLower;
  WeekMode weeks = WeekMode::Block;
  double alpha = kDefaultAlpha;
  double tie_warning_fraction = kDefaultTieWarningFraction;
  // Hurst estimate of the return series; skipped when unset or when the
  // series is too short.
  std::optional<HurstMethod> hurst = HurstMethod::RescaledRange;
};

struct PatternCount {
  std::uint32_t id = 0;
  std::string pattern;
  std::uint64_t count = 0;

  bool operator==(const PatternCount&) const = default;
};

// Everything needed to render a frequency table, a position-count table with
// its row and column statistics, and the family tests for one series.
struct AnalysisReport {
  std::string label;
  std::size_t observations = 0;
  std::string week_mode;
  int order = kDefaultOrder;
  int stride = kDefaultOrder;
  double alpha = kDefaultAlpha;

  std::uint64_t windows = 0;
  std::size_t discarded_values = 0;  // trailing values outside a complete window
  std::size_t skipped_weeks = 0;     // calendar mode only
  std::uint64_t tied_windows = 0;
  double tie_fraction = 0.0;
  bool tie_warning = false;

  std::vector<PatternCount> patterns;
  std::vector<std::vector<std::uint64_t>> position_matrix;  // rows = days
  std::vector<TestOutcome> day_rows;                        // one test per day
  std::vector<TestOutcome> position_columns;                // one test per rank position
  TestOutcome pattern_uniformity;
  TestOutcome monday_largest;
  TestOutcome monday_worst_friday_best;
  std::optional<HurstEstimate> hurst;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze_distribution(const PatternDistribution& dist, const AnalysisOptions& options);
AnalysisReport analyze_series(const ReturnSeries& series, const AnalysisOptions& options = {});

std::string_view to_string(WeekMode mode);

}  // namespace ordseason
