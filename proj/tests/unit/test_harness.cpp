#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "needlet/harness.hpp"
#include "needlet/normality.hpp"
#include "needlet/rng.hpp"

using namespace needlet;

namespace {

ExperimentConfig small(McMode mode, std::size_t reps) {
  ExperimentConfig c;
  c.j = 5;
  c.replications = reps;
  c.mode = mode;
  return c;
}

bool same(const ReplicationRecord& a, const ReplicationRecord& b) {
  return a.index == b.index && a.seed == b.seed && a.S_N == b.S_N && a.U_N == b.U_N && a.z_S == b.z_S &&
         a.z_U == b.z_U && a.sigma2 == b.sigma2;
}

double normal_quantile_for_test(double p) {
  double lo = -10.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(Harness, WorkerCountDoesNotChangeResults) {
  for (auto mode : {McMode::Exact, McMode::Studentized}) {
    auto c = small(mode, 64);
    const auto one = run_mc(c);
    c.workers = 6;
    const auto many = run_mc(c);
    ASSERT_EQ(one.records.size(), many.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) EXPECT_TRUE(same(one.records[i], many.records[i])) << i;
  }
}

TEST(Harness, SingleReplicationReproducible) {
  const auto c = small(McMode::Exact, 10);
  const auto all = run_mc(c);
  const auto r3 = run_replication(c, all.theoretical, 3);
  EXPECT_TRUE(same(r3, all.records[3]));
  EXPECT_EQ(r3.seed, derive_seed(c.seed, 3));
}

TEST(Harness, ValidateRejectsBadConfig) {
  auto c = small(McMode::Exact, 0);
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.replications = 5;
  c.j = -1;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.j = 4;
  c.grid_M = 3;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.grid_M = 0;
  c.alternative_lambda = 1.5;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.alternative_lambda.reset();
  c.workers = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(Harness, NullRejectionRateNearNominal) {
  auto c = small(McMode::Exact, 1000);
  c.j = 8;
  c.workers = 4;
  const auto r = run_mc(c);
  // binomial(1000, 0.05) has sd 0.0069; asymptotic distortion at N = 1024 is small
  EXPECT_GT(r.reject_S, 0.02);
  EXPECT_LT(r.reject_S, 0.08);
  EXPECT_GT(r.reject_U, 0.02);
  EXPECT_LT(r.reject_U, 0.09);
}

TEST(Harness, GridModeMatchesExactAtFineGrid) {
  auto c = small(McMode::Exact, 5);
  const auto exact = run_mc(c);
  c.grid_M = 4096;
  const auto grid = run_mc(c);
  // the grid path draws a wider-band field, so only the scale is comparable
  for (const auto& r : grid.records) EXPECT_TRUE(std::isfinite(r.z_S) && std::isfinite(r.z_U));
  EXPECT_EQ(grid.theoretical.var_S, exact.theoretical.var_S);
}

TEST(Harness, AlternativeRaisesRejection) {
  auto c = small(McMode::Studentized, 200);
  c.j = 7;
  c.workers = 4;
  const auto null = run_mc(c);
  const auto alt = run_alternative(c, 0.5);
  EXPECT_GT(alt.reject_joint, null.reject_joint + 0.1);
}

TEST(Aliasing, ErrorDecaysWithGrid) {
  auto c = small(McMode::Exact, 4);
  c.j = 4;
  const auto r = run_aliasing(c, {128, 256, 512, 1024});
  ASSERT_EQ(r.rows.size(), 4u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(r.rows[i].relative_error, r.rows[i - 1].relative_error);
  EXPECT_LT(r.fitted_exponent, -2.0);
}

TEST(Normality, HistogramCountsSumToN) {
  std::vector<double> v;
  for (int i = -500; i <= 500; ++i) v.push_back(i / 50.0);
  const auto h = make_histogram(v, 30);
  EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}), v.size());
  EXPECT_GT(h.clipped_low, 0u);
  EXPECT_GT(h.clipped_high, 0u);
}

TEST(Normality, DiagnosticsOfKnownSample) {
  const std::vector<double> v{-1.0, 0.0, 1.0};
  const auto d = normality_diagnostics(v);
  EXPECT_EQ(d.n, 3u);
  EXPECT_DOUBLE_EQ(d.mean, 0.0);
  EXPECT_DOUBLE_EQ(d.variance, 1.0);
  EXPECT_DOUBLE_EQ(d.skewness, 0.0);
  EXPECT_THROW(normality_diagnostics(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(emit_histogram(std::vector<double>{}, 10, "unused.csv"), std::invalid_argument);
}

TEST(Normality, KolmogorovSmirnov) {
  std::vector<double> u;
  for (int i = 0; i < 1000; ++i) u.push_back(normal_quantile_for_test((i + 0.5) / 1000.0));
  EXPECT_LT(ks_statistic(u, normal_cdf), 1e-3);
  EXPECT_GT(ks_pvalue(0.01, 1000), 0.9);
  EXPECT_LT(ks_pvalue(0.1, 1000), 1e-6);
}

TEST(Normality, Correlation) {
  const std::vector<double> x{1, 2, 3, 4}, y{2, 4, 6, 8}, z{4, 3, 2, 1};
  EXPECT_NEAR(correlation(x, y), 1.0, 1e-15);
  EXPECT_NEAR(correlation(x, z), -1.0, 1e-15);
}
