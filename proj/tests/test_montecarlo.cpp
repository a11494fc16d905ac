#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "hypergiant/montecarlo.hpp"
#include "hypergiant/report.hpp"
#include "oracles.hpp"

namespace hg = hypergiant;

namespace {

hg::ExperimentSpec small_spec() {
  hg::ExperimentSpec spec;
  spec.N = 2000;
  spec.reps = 1000;
  spec.master_seed = 3;
  return spec;
}

std::string violation(hg::ExperimentSpec spec) {
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ExperimentSpec, NamesViolatedInequality) {
  auto spec = small_spec();
  EXPECT_EQ(violation(spec), "");
  spec.alpha = 0.3;
  EXPECT_EQ(violation(spec), "alpha must lie in (1/2, 1)");
  spec = small_spec();
  spec.gamma_exp = 0.1;
  EXPECT_EQ(violation(spec), "gamma must exceed 2*alpha - 1");
  spec = small_spec();
  spec.xi_exp = 0.3;
  EXPECT_EQ(violation(spec), "gamma must be below xi");
  spec = small_spec();
  spec.xi_exp = 0.7;
  EXPECT_EQ(violation(spec), "xi must be below alpha");
  spec = small_spec();
  spec.lambda = 0.9;
  EXPECT_EQ(violation(spec), "lambda must exceed 1");
}

TEST(ExperimentSpec, DerivedScales) {
  auto spec = small_spec();
  spec.N = 10000;
  EXPECT_EQ(spec.seed_count(), 26);  // ceil(10^1.4)
  EXPECT_NEAR(spec.slack(), std::pow(10.0, 1.8), 1e-9);
  EXPECT_EQ(hg::giant_centre(0.354, 10000), 3540);
  EXPECT_EQ(hg::martingale_horizon(0.354, 10000, 1.0, 0.6), 3540 + 251);
  const auto t = hg::TheoryConstants::compute(3, 1.5);
  const double y = hg::y_for_observability(t, 10000, 0.55, 3.0);
  EXPECT_NEAR(t.rate_J(y) * std::pow(1e4, 0.1), 3.0, 1e-12);
}

TEST(GiantSamples, EmptyForZeroReps) {
  auto spec = small_spec();
  spec.reps = 0;
  EXPECT_TRUE(hg::run_giant_samples(spec).empty());
}

TEST(GiantSamples, IndependentOfThreadCount) {
  for (auto mode : {hg::Mode::exact, hg::Mode::proxy}) {
    auto spec = small_spec();
    spec.reps = 64;
    spec.mode = mode;
    spec.threads = 1;
    const auto one = hg::run_giant_samples(spec);
    spec.threads = 4;
    EXPECT_EQ(hg::run_giant_samples(spec), one);
  }
}

TEST(GiantSamples, LawOfLargeNumbers) {
  auto spec = small_spec();
  spec.N = 10000;
  spec.reps = 200;
  spec.mode = hg::Mode::exact;
  const auto samples = hg::run_giant_samples(spec);
  double mean = 0.0;
  for (auto s : samples) mean += static_cast<double>(s);
  mean /= 200.0 * 1e4;
  EXPECT_NEAR(mean, oracle::frozen::rho_d3_l15, 0.02);
}

TEST(Tail, ZeroLevelIsCentred) {
  auto spec = small_spec();
  spec.N = 100000;
  spec.reps = 1000;
  spec.mode = hg::Mode::exact;
  spec.y_grid = {0.0};
  const auto recs = hg::estimate_tail(spec);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_GT(recs[0].p_hat, 0.95);
  EXPECT_NEAR(recs[0].rate_hat, 0.0, 0.05);
  EXPECT_NEAR(recs[0].p_up, 0.5, 0.05);
  EXPECT_NEAR(recs[0].p_down, 0.5, 0.05);
}

TEST(Tail, ZeroHitsGiveLowerBoundedRate) {
  auto spec = small_spec();
  spec.y_grid = {50.0};
  std::vector<std::string> warnings;
  const auto recs = hg::estimate_tail(spec, &warnings);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].hits_up + recs[0].hits_down, 0);
  EXPECT_TRUE(recs[0].rate_lower_bound_only);
  EXPECT_TRUE(std::isnan(recs[0].rate_hat));
  EXPECT_NEAR(recs[0].rate_ci.lo, -std::log(3.0 / 1000.0) / spec.speed(), 1e-12);
  EXPECT_TRUE(std::isinf(recs[0].rate_ci.hi));
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Tail, DefaultGridIsMonotoneInThreshold) {
  auto spec = small_spec();
  spec.reps = 2000;
  const auto recs = hg::estimate_tail(spec);
  ASSERT_EQ(recs.size(), std::size(hg::kDefaultTargets));
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_GT(recs[i].y, recs[i - 1].y);
    EXPECT_LE(recs[i].hits_up + recs[i].hits_down, recs[i - 1].hits_up + recs[i - 1].hits_down);
  }
  for (const auto& r : recs) {
    EXPECT_LE(r.ci.lo, r.p_hat);
    EXPECT_GE(r.ci.hi, r.p_hat);
  }
}

TEST(Tail, RequiresEnoughReps) {
  auto spec = small_spec();
  spec.reps = 999;
  EXPECT_THROW(hg::estimate_tail(spec), std::invalid_argument);
  EXPECT_THROW(hg::estimate_clt([] {
                 auto s = small_spec();
                 s.reps = 99;
                 return s;
               }()),
               std::invalid_argument);
}

TEST(Coupling, FullSeedSetCoversGraph) {
  auto spec = small_spec();
  spec.N = 500;
  spec.reps = 50;
  spec.alpha = 0.99999;
  spec.gamma_exp = 0.999985;  // ceil(N^gamma) = N
  spec.xi_exp = 0.999988;
  ASSERT_EQ(spec.seed_count(), 500);
  const auto rec = hg::coupling_check(spec);
  EXPECT_EQ(rec.giant_exceeds, 0);
  EXPECT_GT(rec.mean_gap, 0.0);  // |C_<=N| = N > |C_max| for disconnected graphs
  spec.mode = hg::Mode::proxy;
  EXPECT_THROW(hg::coupling_check(spec), std::invalid_argument);
}

TEST(Martingale, PairedHorizons) {
  auto spec = small_spec();
  spec.zeta = {-1.0, 0.0, 1.0};
  const auto recs = hg::martingale_mdp_check(spec);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_LT(recs[0].horizon, recs[1].horizon);
  EXPECT_LT(recs[1].horizon, recs[2].horizon);
  EXPECT_EQ(recs[1].relative_change_vs_zero, 0.0);
  for (const auto& r : recs) {
    EXPECT_LE(std::abs(r.mean), 4.0 * r.mean_se);
    EXPECT_NEAR(r.var_over_N / r.c_theory, 1.0, 0.2);
  }
  // Size identity at floor(rho_d N): centred on rho_d N with variance sigma2 N.
  const auto theory = hg::TheoryConstants::compute(spec.d, spec.lambda);
  const double n = static_cast<double>(spec.N);
  const auto& mid = recs[1];
  EXPECT_LE(std::abs(mid.size_rhs_mean - theory.rho_d * n), 4.0 * mid.size_rhs_se + 2.0 / (1.0 - theory.lambda_star));
  const double var = mid.size_rhs_se * mid.size_rhs_se * static_cast<double>(spec.reps);
  EXPECT_NEAR(var / (theory.sigma2 * n), 1.0, 0.2);
}

TEST(Report, DeterministicAcrossThreadsAndHashed) {
  for (auto kind : {hg::ExperimentKind::clt, hg::ExperimentKind::tail, hg::ExperimentKind::martingale,
                    hg::ExperimentKind::coupling}) {
    auto spec = small_spec();
    spec.mode = kind == hg::ExperimentKind::coupling ? hg::Mode::exact : hg::Mode::proxy;
    spec.threads = 1;
    const auto a = hg::report_json(hg::run_experiment(kind, spec), false).dump();
    spec.threads = 3;
    const auto b = hg::report_json(hg::run_experiment(kind, spec), false).dump();
    EXPECT_EQ(a, b) << hg::to_string(kind);
    spec.master_seed = 4;
    EXPECT_NE(hg::spec_hash(kind, spec), hg::spec_hash(kind, small_spec()));
  }
}

TEST(Report, TheoryJsonKeys) {
  const auto j = hg::theory_json(hg::TheoryConstants::compute(3, 1.5));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"d", "lambda", "rho2", "rho_d", "lambda_star", "c", "sigma2"}));
}
