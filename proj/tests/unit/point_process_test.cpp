#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "lroc/point_process.hpp"
#include "lroc/roc_core.hpp"

using namespace lroc;

TEST(PointProcessLr, Values) {
  EXPECT_NEAR(point_process_lr(PointProcessPair(1.0, 1), 1e-12), 1.0, 1e-11);
  EXPECT_NEAR(point_process_lr(PointProcessPair(1.0, 2), 1.0), std::exp(1.0) / 8.0, 1e-15);
  EXPECT_NEAR(point_process_lr(PointProcessPair(1.0, 2), 1.0), 0.339785, 1e-6);
  EXPECT_THROW(point_process_lr(PointProcessPair(1.0, 2), 0.0), std::invalid_argument);
  EXPECT_THROW(point_process_lr(PointProcessPair(1.0, 2), -1.0), std::invalid_argument);
  EXPECT_THROW(PointProcessPair(0.0, 2), std::invalid_argument);
  EXPECT_THROW(PointProcessPair(1.0, 0), std::invalid_argument);
}

TEST(PointProcessLr, MinimumAtFailuresOverRate) {
  for (auto [rate, n] : {std::pair{1.0, 2}, std::pair{0.5, 5}, std::pair{3.0, 1}}) {
    const PointProcessPair m(rate, n);
    double best_t = 0.0, best = INFINITY;
    for (int i = 1; i <= 200000; ++i) {
      const double t = i * 1e-4 * n / rate;
      const double v = point_process_log_lr(m, t);
      if (v < best) best = v, best_t = t;
    }
    EXPECT_NEAR(best_t, n / rate, 1e-3 * n / rate);
    // Decreasing before, increasing after.
    EXPECT_GT(point_process_lr(m, 0.5 * n / rate), point_process_lr(m, n / rate));
    EXPECT_GT(point_process_lr(m, 2.0 * n / rate), point_process_lr(m, n / rate));
  }
}

TEST(PointProcessLr, DependsOnlyOnLastTime) {
  // Interior event times do not enter the LR: two different histories with
  // the same last time give the same value through the density ratio.
  const PointProcessPair m(1.5, 3);
  auto density_ratio = [&](const std::vector<double>& t) {
    const double last = t.back();
    const double n = static_cast<double>(t.size());
    const double log_poisson = n * std::log(m.rate()) - m.rate() * last;
    const double log_polya = std::lgamma(n + 1) + n * std::log(m.rate()) - (n + 1) * std::log1p(m.rate() * last);
    return std::exp(log_polya - log_poisson);
  };
  const double a = density_ratio({0.1, 0.2, 2.0});
  const double b = density_ratio({1.0, 1.9, 2.0});
  EXPECT_DOUBLE_EQ(a, b);
  // The library's LR leaves out the constant n!, which no ROC can see.
  EXPECT_NEAR(a / std::tgamma(4.0), point_process_lr(m, 2.0), 1e-12);
}

TEST(Simulation, MeanCountsEqualRateTimesHorizon) {
  const std::size_t reps = 100000;
  for (ProcessKind kind : {ProcessKind::poisson, ProcessKind::polya}) {
    const auto counts = simulate_counts(kind, 1.0, 5.0, reps, 21);
    double mean = 0.0, sq = 0.0;
    for (auto c : counts) mean += static_cast<double>(c);
    mean /= static_cast<double>(reps);
    for (auto c : counts) sq += (static_cast<double>(c) - mean) * (static_cast<double>(c) - mean);
    const double se = std::sqrt(sq / static_cast<double>(reps - 1) / static_cast<double>(reps));
    EXPECT_LT(std::abs(mean - 5.0), 3.0 * se);
  }
}

TEST(Simulation, FirstArrivalDistributions) {
  const std::size_t reps = 100000;
  const PointProcessPair m(1.0, 1);
  auto ks = [&](ProcessKind kind, auto cdf) {
    auto t = simulate_last_times(kind, m, reps, 33);
    std::sort(t.begin(), t.end());
    double d = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double f = cdf(t[i]);
      d = std::max({d, std::abs(f - static_cast<double>(i) / reps), std::abs(f - static_cast<double>(i + 1) / reps)});
    }
    return d;
  };
  EXPECT_LT(ks(ProcessKind::poisson, [](double t) { return 1.0 - std::exp(-t); }), 0.01);
  EXPECT_LT(ks(ProcessKind::polya, [](double t) { return 1.0 - 1.0 / (1.0 + t); }), 0.01);
}

TEST(Simulation, ProperRocIsConcaveWithinMonteCarloTolerance) {
  const std::size_t reps = 100000;
  const RocCurve roc = proper_roc(simulate_processes(PointProcessPair(1.0, 5), reps, 8));
  EXPECT_TRUE(roc.is_concave(3.0 / std::sqrt(static_cast<double>(reps))));
  EXPECT_GT(auc(roc), 0.5);
}

TEST(Simulation, SeedDeterminism) {
  const PointProcessPair m(2.0, 3);
  EXPECT_EQ(simulate_last_times(ProcessKind::polya, m, 5000, 4), simulate_last_times(ProcessKind::polya, m, 5000, 4));
  EXPECT_NE(simulate_last_times(ProcessKind::polya, m, 5000, 4), simulate_last_times(ProcessKind::polya, m, 5000, 5));
}
