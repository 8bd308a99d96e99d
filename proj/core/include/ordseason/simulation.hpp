#pragma once

#include "ordseason/fgn.hpp"
#include "ordseason/stats.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordseason {

// Monte-Carlo experiment: `replications` independent fGn series, each
// partitioned into non-overlapping windows of `order` and run through the
// five hypothesis tests.
struct EnsembleConfig {
  FgnConfig base;  // base.seed is ignored; per-replication seeds come from master_seed
  std::size_t replications = 1000;
  std::uint64_t master_seed = 0;
  int order = kDefaultOrder;
  double alpha = kDefaultAlpha;
  unsigned jobs = 1;
  // N used for the z statistic of the averaged family frequency; 0 = windows per sample.
  std::uint64_t z_weeks = 0;
  FgnMethod method = FgnMethod::CirculantEmbedding;

  void validate() const;
};

struct RejectionCounts {
  std::uint64_t at_10 = 0;
  std::uint64_t at_05 = 0;
  std::uint64_t at_01 = 0;
  std::uint64_t at_alpha = 0;

  bool operator==(const RejectionCounts&) const = default;
};

// Chi-squared hypothesis over the ensemble: `averaged` is the test applied to
// per-cell mean counts, `rejections` counts per-sample rejections.
struct ChiSquareSummary {
  TestOutcome averaged;
  RejectionCounts rejections;

  bool operator==(const ChiSquareSummary&) const = default;
};

struct FamilySummary {
  double p_expected = 0.0;
  double mean_p_observed = 0.0;
  TestOutcome averaged;  // z-test on mean_p_observed with N = z_weeks
  RejectionCounts rejections;
  std::uint64_t above_expected = 0;  // replications with p_o > p_e

  bool operator==(const FamilySummary&) const = default;
};

struct SimulationReport {
  double hurst = 0.5;
  std::size_t length = 0;
  std::size_t replications = 0;
  std::uint64_t master_seed = 0;
  int order = kDefaultOrder;
  double alpha = kDefaultAlpha;
  double sigma = 1.0;
  std::uint64_t weeks_per_sample = 0;
  std::uint64_t z_weeks = 0;
  std::uint64_t tied_windows = 0;

  ChiSquareSummary h1;
  std::vector<ChiSquareSummary> h2;  // one per day
  std::vector<ChiSquareSummary> h3;  // one per rank position
  FamilySummary h4;
  FamilySummary h5;

  bool operator==(const SimulationReport&) const = default;
};

// Bit-identical output for a given config regardless of cfg.jobs.
SimulationReport run_ensemble(const EnsembleConfig& cfg);

}  // namespace ordseason
