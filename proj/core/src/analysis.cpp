#include "ordseason/analysis.hpp"

#include "ordseason/errors.hpp"
#include "ordseason/ingest.hpp"
#include "ordseason/log.hpp"

#include <sstream>

namespace ordseason {

AnalysisReport analyze_distribution(const PatternDistribution& dist, const AnalysisOptions& options) {
  if (dist.windows() == 0) throw InvalidInput("no complete windows to analyze");
  AnalysisReport r;
  r.order = dist.order();
  r.stride = options.stride == 0 ? dist.order() : options.stride;
  r.alpha = options.alpha;
  r.week_mode = std::string(to_string(options.weeks));
  r.windows = dist.windows();
  r.discarded_values = dist.discarded_tail();
  r.tied_windows = dist.tied_windows();
  r.tie_fraction = dist.tie_fraction();
  r.tie_warning = dist.ties_exceed(options.tie_warning_fraction);

  const auto counts = dist.counts();
  r.patterns.reserve(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const PatternId id{static_cast<std::uint32_t>(k + 1)};
    r.patterns.push_back({id.value, unrank_pattern(id, dist.order()).to_string(), counts[k]});
  }

  const PositionMatrix matrix = position_matrix(dist);
  r.position_matrix = matrix.rows();
  r.day_rows = test_h2_day_rows(matrix);
  r.position_columns = test_h3_position_columns(matrix);
  r.pattern_uniformity = test_h1_pattern_uniformity(dist);
  if (dist.order() >= 3) {
    r.monday_largest = test_h4_monday_largest(dist);
    r.monday_worst_friday_best = test_h5_monday_worst_friday_best(dist);
  }
  return r;
}

AnalysisReport analyze_series(const ReturnSeries& series, const AnalysisOptions& options) {
  series.validate();
  PatternDistribution dist(options.order);
  std::size_t skipped = 0;
  if (options.weeks == WeekMode::Calendar) {
    if (options.order != 5) throw InvalidInput("calendar weeks require order 5");
    const CalendarWeeks weeks = calendar_weeks(series);
    if (weeks.weeks() == 0) throw InvalidInput("no complete Monday-Friday week in the series");
    dist = count_patterns(weeks.values, {.order = 5, .stride = 5, .tie_rule = options.tie_rule});
    skipped = weeks.skipped_weeks;
  } else {
    dist = count_patterns(series.view(),
                          {.order = options.order, .stride = options.stride, .tie_rule = options.tie_rule});
  }

  AnalysisOptions effective = options;
  if (options.weeks == WeekMode::Calendar) effective.stride = 5;
  AnalysisReport r = analyze_distribution(dist, effective);
  r.label = series.label;
  r.observations = series.size();
  r.skipped_weeks = skipped;
  if (r.tie_warning) {
    std::ostringstream msg;
    msg << series.label << ": " << r.tied_windows << " of " << r.windows
        << " windows contain ties; ordinal patterns may be unreliable";
    log::warn(msg.str());
  }

  if (options.hurst) {
    try {
      r.hurst = estimate_hurst(series.view(), {.method = *options.hurst});
    } catch (const Error& e) {
      log::info(std::string("Hurst estimate skipped: ") + e.what());
    }
  }
  return r;
}

std::string_view to_string(WeekMode mode) {
  switch (mode) {
    case WeekMode::Block: return "block";
    case WeekMode::Calendar: return "calendar";
  }
  return "unknown";
}

}  // namespace ordseason
