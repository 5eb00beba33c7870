#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "generators.hpp"
#include "lroc/concentration.hpp"
#include "lroc/roc_core.hpp"

using namespace lroc;

namespace {

LrDistribution table_lr() { return finite_lr_distribution(fixtures::ordinal_table()); }
LrDistribution rect_lr() { return lr_distribution_piecewise(fixtures::three_rectangles()); }

}  // namespace

TEST(Concentration, DegenerateIsDiagonal) {
  const auto phi = concentration(fixtures::unit_lr());
  for (const auto& x : gen::rational_grid(50)) EXPECT_EQ(phi.exact_at(x), x);
}

TEST(Concentration, ThreeRectanglesSlopesIncrease) {
  const auto& segs = concentration(rect_lr()).curve().segments();
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[0].slope, Rational(3, 18));
  EXPECT_EQ(segs[1].slope, Rational(21, 18));
  EXPECT_EQ(segs[2].slope, Rational(30, 18));
  EXPECT_TRUE(concentration(rect_lr()).is_convex());
}

TEST(Concentration, MatchesOracleAndPointwiseFormula) {
  const auto d = table_lr();
  const auto phi = concentration(d);
  for (const auto& x : gen::rational_grid(300)) {
    EXPECT_EQ(phi.exact_at(x), oracle::concentration_at(fixtures::ordinal_table_cells(), x));
    EXPECT_EQ(phi.exact_at(x), concentration_value(d, x));
    EXPECT_LE(phi.exact_at(x), x);
  }
}

TEST(Concentration, OrdinalTableIsReflectedRoc) {
  const auto roc = proper_roc(table_lr());
  const auto phi = concentration(table_lr());
  for (const auto& x : gen::rational_grid(116)) EXPECT_EQ(phi.exact_at(x), 1 - roc.exact_at(1 - x));
}

TEST(Duality, ExactModelsHaveZeroGap) {
  std::vector<Rational> grid{0, 1};
  for (const auto& x : gen::rational_grid(1000)) grid.push_back(x);
  EXPECT_EQ(duality_check(table_lr(), grid), 0);
  EXPECT_EQ(duality_check(rect_lr(), grid), 0);
  EXPECT_EQ(duality_check(fixtures::unit_lr(), grid), 0);
}

TEST(Duality, SampledDistributionsAgreeToRounding) {
  const auto d = sample_lr_piecewise(fixtures::three_rectangles(), 5000, 7);
  EXPECT_LT(duality_check(d, uniform_grid(1000)), 1e-12);
}

TEST(Concentration, ConvexityMirrorsConcavity) {
  gen::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto d = gen::to_distribution(gen::random_cells(rng));
    EXPECT_EQ(concentration(d).is_convex(), proper_roc(d).is_concave());
  }
}

TEST(Lorenz, PointMassIsEquality) {
  const auto l = lorenz_from_distribution(FiniteIncomeDistribution{{Rational(1)}, {Rational(1)}});
  for (const auto& x : gen::rational_grid(10)) EXPECT_EQ(l.exact_at(x), x);
}

TEST(Lorenz, TwoPointVertex) {
  const auto l = lorenz_from_distribution(FiniteIncomeDistribution{{1, 3}, {Rational(1, 2), Rational(1, 2)}});
  EXPECT_EQ(oracle::lorenz_at({{1, Rational(1, 2)}, {3, Rational(1, 2)}}, Rational(1, 2)), Rational(1, 4));
  EXPECT_EQ(l.exact_at(Rational(1, 2)), Rational(1, 4));
  const std::vector<Point> v{{0, 0}, {0.5, 0.25}, {1, 1}};
  EXPECT_EQ(l.curve().vertices(), v);
}

TEST(Lorenz, MatchesTextbookConstruction) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = gen::uniform_int(rng, 1, 6);
    FiniteIncomeDistribution income;
    std::vector<std::pair<Rational, Rational>> pairs;
    Rational total = 0;
    std::vector<int> w;
    for (int i = 0; i < k; ++i) w.push_back(gen::uniform_int(rng, 1, 9)), total += w.back();
    for (int i = 0; i < k; ++i) {
      const Rational y = gen::uniform_int(rng, 0, 20);
      income.values.push_back(y);
      income.probabilities.push_back(w[static_cast<std::size_t>(i)] / total);
      pairs.emplace_back(y, w[static_cast<std::size_t>(i)] / total);
    }
    Rational mean = 0;
    for (const auto& [y, p] : pairs) mean += y * p;
    if (mean == 0) continue;
    const auto l = lorenz_from_distribution(income);
    for (const auto& x : gen::rational_grid(60)) ASSERT_EQ(l.exact_at(x), oracle::lorenz_at(pairs, x));
  }
}

TEST(Lorenz, ExponentialClosedForm) {
  const auto l = lorenz_from_distribution([](double u) { return -std::log1p(-u); }, 10000);
  for (double x : uniform_grid(1000)) EXPECT_NEAR(l(x), x + (1 - x) * std::log1p(-x), 1e-3);
}

TEST(Lorenz, RejectsBadIncome) {
  EXPECT_THROW(lorenz_from_distribution(FiniteIncomeDistribution{{-1, 3}, {Rational(1, 2), Rational(1, 2)}}),
               std::invalid_argument);
  EXPECT_THROW(lorenz_from_distribution(FiniteIncomeDistribution{{0}, {1}}), std::invalid_argument);
  EXPECT_THROW(lorenz_from_distribution([](double u) { return u < 0.5 ? 1.0 : INFINITY; }, 100),
               std::invalid_argument);
}
