#include "ordseason/errors.hpp"
#include "ordseason/simulation.hpp"

#include <gtest/gtest.h>

using namespace ordseason;

namespace {

EnsembleConfig ensemble(double h, std::size_t reps, unsigned jobs = 1) {
  EnsembleConfig cfg;
  cfg.base.hurst = h;
  cfg.base.length = 10000;
  cfg.replications = reps;
  cfg.master_seed = 42;
  cfg.jobs = jobs;
  return cfg;
}

}  // namespace

TEST(RunEnsemble, IndependentOfWorkerCount) {
  EXPECT_EQ(run_ensemble(ensemble(0.7, 24, 1)), run_ensemble(ensemble(0.7, 24, 5)));
}

TEST(RunEnsemble, ReportShape) {
  const auto r = run_ensemble(ensemble(0.5, 10));
  EXPECT_EQ(r.weeks_per_sample, 2000u);
  EXPECT_EQ(r.z_weeks, 2000u);
  EXPECT_EQ(r.h2.size(), 5u);
  EXPECT_EQ(r.h3.size(), 5u);
  EXPECT_EQ(r.h1.averaged.df, 119);
  EXPECT_DOUBLE_EQ(r.h4.p_expected, 0.2);
  EXPECT_DOUBLE_EQ(r.h5.p_expected, 0.05);
  EXPECT_LE(r.h1.rejections.at_01, r.h1.rejections.at_05);
  EXPECT_LE(r.h1.rejections.at_05, r.h1.rejections.at_10);
}

TEST(RunEnsemble, RejectsInvalidConfig) {
  auto cfg = ensemble(0.5, 0);
  EXPECT_THROW(run_ensemble(cfg), InvalidInput);
  cfg = ensemble(1.5, 3);
  EXPECT_THROW(run_ensemble(cfg), InvalidInput);
}

// Bands scaled from 1000 to 200 replications.
TEST(RunEnsemble, WhiteNoiseRejectsAtNominalRate) {
  const auto r = run_ensemble(ensemble(0.5, 200));
  EXPECT_GE(r.h1.rejections.at_05, 4u);
  EXPECT_LE(r.h1.rejections.at_05, 20u);
}

TEST(RunEnsemble, StrongPersistenceAlwaysRejects) {
  const auto r = run_ensemble(ensemble(0.9, 200));
  EXPECT_GE(r.h1.rejections.at_05, 198u);
  EXPECT_GT(r.h4.mean_p_observed, 0.22);
  EXPECT_GE(r.h4.rejections.at_05, 90u);
}

TEST(RunEnsemble, FamilyFrequenciesFollowPersistence) {
  const auto persistent = run_ensemble(ensemble(0.7, 200));
  EXPECT_GE(persistent.h5.above_expected, 160u);
  EXPECT_LE(persistent.h5.above_expected, 190u);
  const auto anti = run_ensemble(ensemble(0.1, 200));
  EXPECT_LT(anti.h5.mean_p_observed, 0.05);
}

TEST(RunEnsemble, WhiteNoiseIsTheLeastRejected) {
  std::vector<std::uint64_t> rejections;
  for (int k = 1; k <= 9; ++k) rejections.push_back(run_ensemble(ensemble(k / 10.0, 100)).h1.rejections.at_05);
  const auto at_half = rejections[4];
  for (std::size_t k = 0; k < rejections.size(); ++k) {
    if (k != 4) EXPECT_GT(rejections[k], at_half) << "H=" << (k + 1) / 10.0;
  }
}
