#include "ordseason/simulation.hpp"

#include "ordseason/errors.hpp"
#include "ordseason/parallel.hpp"

#include <array>

namespace ordseason {
namespace {

// Per-replication decisions: bit 0..3 = rejected at 10%, 5%, 1%, alpha.
using Decisions = std::uint8_t;

Decisions decisions(const TestOutcome& t, double alpha) {
  return static_cast<Decisions>((t.reject_10 ? 1 : 0) | (t.reject_05 ? 2 : 0) | (t.reject_01 ? 4 : 0) |
                                (t.rejects(alpha) ? 8 : 0));
}

void tally(RejectionCounts& counts, Decisions d) {
  counts.at_10 += (d & 1) ? 1 : 0;
  counts.at_05 += (d & 2) ? 1 : 0;
  counts.at_01 += (d & 4) ? 1 : 0;
  counts.at_alpha += (d & 8) ? 1 : 0;
}

struct Replication {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> cells;  // position matrix, row-major
  std::uint64_t tied = 0;
  Decisions h1 = 0;
  std::vector<Decisions> h2;
  std::vector<Decisions> h3;
  Decisions h4 = 0;
  Decisions h5 = 0;
  std::uint64_t family4 = 0;
  std::uint64_t family5 = 0;
};

Replication run_one(const EnsembleConfig& cfg, std::size_t index) {
  FgnConfig fgn = cfg.base;
  fgn.seed = replication_seed(cfg.master_seed, index);
  const ReturnSeries series = fgn_generate(fgn, cfg.method);
  const PatternDistribution dist = count_patterns(series.view(), {.order = cfg.order});
  const PositionMatrix matrix = position_matrix(dist);

  Replication r;
  r.counts.assign(dist.counts().begin(), dist.counts().end());
  for (int i = 0; i < cfg.order; ++i) {
    for (int j = 0; j < cfg.order; ++j) r.cells.push_back(matrix.at(i, j));
  }
  r.tied = dist.tied_windows();
  r.h1 = decisions(test_h1_pattern_uniformity(dist), cfg.alpha);
  for (const auto& t : test_h2_day_rows(matrix)) r.h2.push_back(decisions(t, cfg.alpha));
  for (const auto& t : test_h3_position_columns(matrix)) r.h3.push_back(decisions(t, cfg.alpha));
  r.h4 = decisions(test_h4_monday_largest(dist), cfg.alpha);
  r.h5 = decisions(test_h5_monday_worst_friday_best(dist), cfg.alpha);
  r.family4 = family_count(dist, PatternFamily::MondayLargest);
  r.family5 = family_count(dist, PatternFamily::MondayWorstFridayBest);
  return r;
}

FamilySummary summarize_family(const std::vector<Replication>& reps, PatternFamily family,
                               const EnsembleConfig& cfg, std::uint64_t weeks, std::uint64_t z_weeks) {
  const bool largest = family == PatternFamily::MondayLargest;
  FamilySummary s;
  s.p_expected = family_expected_frequency(family, cfg.order);
  std::uint64_t total = 0;
  for (const auto& r : reps) {
    const std::uint64_t hits = largest ? r.family4 : r.family5;
    total += hits;
    tally(s.rejections, largest ? r.h4 : r.h5);
    if (static_cast<double>(hits) > s.p_expected * static_cast<double>(weeks)) ++s.above_expected;
  }
  s.mean_p_observed =
      static_cast<double>(total) / (static_cast<double>(weeks) * static_cast<double>(reps.size()));
  s.averaged = binomial_proportion_test(s.p_expected, s.mean_p_observed, z_weeks);
  return s;
}

}  // namespace

void EnsembleConfig::validate() const {
  base.validate();
  if (replications == 0) throw InvalidInput("replications must be positive");
  if (order < kMinOrder || order > kMaxOrder) throw InvalidInput("invalid pattern order");
  if (order < 3) throw InvalidInput("ensemble tests need order >= 3");
  if (base.length < static_cast<std::size_t>(order)) throw InvalidInput("series shorter than one window");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must be in (0, 1)");
}

SimulationReport run_ensemble(const EnsembleConfig& cfg) {
  cfg.validate();
  std::vector<Replication> reps(cfg.replications);
  parallel_for_index(cfg.replications, cfg.jobs, [&](std::size_t i) { reps[i] = run_one(cfg, i); });

  SimulationReport report;
  report.hurst = cfg.base.hurst;
  report.length = cfg.base.length;
  report.replications = cfg.replications;
  report.master_seed = cfg.master_seed;
  report.order = cfg.order;
  report.alpha = cfg.alpha;
  report.sigma = cfg.base.sigma;
  report.weeks_per_sample = (cfg.base.length - static_cast<std::size_t>(cfg.order)) /
                                static_cast<std::size_t>(cfg.order) + 1;
  report.z_weeks = cfg.z_weeks == 0 ? report.weeks_per_sample : cfg.z_weeks;

  // Integer sums first, a single division at the end: the reduction is exact.
  const std::size_t patterns = reps.front().counts.size();
  const auto order = static_cast<std::size_t>(cfg.order);
  std::vector<std::uint64_t> count_sum(patterns, 0);
  std::vector<std::uint64_t> cell_sum(order * order, 0);
  report.h2.resize(order);
  report.h3.resize(order);
  for (const auto& r : reps) {
    for (std::size_t k = 0; k < patterns; ++k) count_sum[k] += r.counts[k];
    for (std::size_t c = 0; c < cell_sum.size(); ++c) cell_sum[c] += r.cells[c];
    report.tied_windows += r.tied;
    tally(report.h1.rejections, r.h1);
    for (std::size_t i = 0; i < order; ++i) {
      tally(report.h2[i].rejections, r.h2[i]);
      tally(report.h3[i].rejections, r.h3[i]);
    }
  }

  const double n = static_cast<double>(cfg.replications);
  std::vector<double> mean_counts(patterns);
  for (std::size_t k = 0; k < patterns; ++k) mean_counts[k] = static_cast<double>(count_sum[k]) / n;
  report.h1.averaged = chi2_uniformity_test(mean_counts);

  std::vector<double> line(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) line[j] = static_cast<double>(cell_sum[i * order + j]) / n;
    report.h2[i].averaged = chi2_uniformity_test(line);
    for (std::size_t j = 0; j < order; ++j) line[j] = static_cast<double>(cell_sum[j * order + i]) / n;
    report.h3[i].averaged = chi2_uniformity_test(line);
  }

  report.h4 = summarize_family(reps, PatternFamily::MondayLargest, cfg, report.weeks_per_sample,
                               report.z_weeks);
  report.h5 = summarize_family(reps, PatternFamily::MondayWorstFridayBest, cfg, report.weeks_per_sample,
                               report.z_weeks);
  return report;
}

}  // namespace ordseason
