#include <gtest/gtest.h>

#include <sstream>

#include "lroc/roc_curve.hpp"

using namespace lroc;

namespace {

PiecewiseCurve two_segment() {
  return PiecewiseCurve::exact({{0, Rational(1, 2), Rational(3, 2), 0}, {Rational(1, 2), 1, Rational(1, 2), Rational(1, 2)}});
}

}  // namespace

TEST(PiecewiseCurve, ExactEvaluation) {
  const auto c = two_segment();
  EXPECT_EQ(c.exact_at(Rational(1, 4)), Rational(3, 8));
  EXPECT_EQ(c.exact_at(Rational(1, 2)), Rational(3, 4));
  EXPECT_DOUBLE_EQ(c(0.75), 0.875);
  EXPECT_EQ(c.exact_area(), Rational(5, 8));
  const std::vector<Point> v{{0, 0}, {0.5, 0.75}, {1, 1}};
  EXPECT_EQ(c.vertices(), v);
}

TEST(PiecewiseCurve, RejectsGapsAndJumps) {
  EXPECT_THROW(PiecewiseCurve::exact({{0, Rational(1, 2), 1, 0}, {Rational(2, 3), 1, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(PiecewiseCurve::exact({{0, Rational(1, 2), 1, 0}, {Rational(1, 2), 1, 1, Rational(1, 10)}}),
               std::invalid_argument);
  EXPECT_THROW(PiecewiseCurve::exact({{0, Rational(1, 2), 1, 0}}), std::invalid_argument);
  EXPECT_THROW(PiecewiseCurve::sampled({{0, 0}, {0.6, 0.5}, {0.4, 0.7}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(PiecewiseCurve::sampled({{0.1, 0}, {1, 1}}), std::invalid_argument);
}

TEST(PiecewiseCurve, PolylineTakesTopOfVerticalRun) {
  const auto c = PiecewiseCurve::sampled({{0, 0}, {0, 0.4}, {0.5, 0.8}, {0.5, 0.9}, {1, 1}});
  EXPECT_DOUBLE_EQ(c(0.0), 0.4);
  EXPECT_DOUBLE_EQ(c(0.25), 0.6);
  EXPECT_DOUBLE_EQ(c(0.5), 0.9);
  EXPECT_DOUBLE_EQ(c(1.0), 1.0);
}

TEST(RocCurve, ValidatesEndpointsAndMonotonicity) {
  EXPECT_NO_THROW(RocCurve(two_segment()));
  EXPECT_THROW(RocCurve(PiecewiseCurve::sampled({{0, 0.1}, {1, 1}})), std::invalid_argument);
  EXPECT_THROW(RocCurve(PiecewiseCurve::sampled({{0, 0}, {0.5, 0.7}, {0.6, 0.6}, {1, 1}})), std::invalid_argument);
  EXPECT_THROW(RocCurve(PiecewiseCurve::exact({{0, 1, 2, 0}})), std::invalid_argument);
}

TEST(RocCurve, ConcavityOfExactAndSampled) {
  EXPECT_TRUE(RocCurve(two_segment()).is_concave());
  const RocCurve hooked(PiecewiseCurve::exact({{0, Rational(1, 2), Rational(1, 2), 0}, {Rational(1, 2), 1, Rational(3, 2), Rational(-1, 2)}}));
  EXPECT_FALSE(hooked.is_concave());
  const RocCurve dip(PiecewiseCurve::sampled({{0, 0}, {0.25, 0.5}, {0.5, 0.55}, {0.75, 0.9}, {1, 1}}));
  // The chord from (0.25, 0.5) to (0.75, 0.9) passes 0.7 at x = 0.5.
  EXPECT_NEAR(dip.concavity_violation(), 0.15, 1e-12);
  EXPECT_TRUE(dip.is_concave(0.2));
  EXPECT_FALSE(dip.is_concave(0.1));
}

TEST(ConcavityViolation, EndRunsAreIgnored) {
  const std::vector<Point> pts{{0, 0}, {0, 0.3}, {0.5, 0.8}, {1, 0.95}, {1, 1}};
  EXPECT_EQ(concavity_violation(pts), 0.0);
  const std::vector<Point> convex{{0, 0}, {0.5, 0.1}, {1, 1}};
  EXPECT_NEAR(concavity_violation(convex), 0.4, 1e-12);
  EXPECT_EQ(convexity_violation(convex), 0.0);
}

TEST(Auc, TrapezoidForPolylines) {
  const RocCurve c(PiecewiseCurve::sampled({{0, 0}, {0.5, 0.5}, {1, 1}}));
  EXPECT_DOUBLE_EQ(auc(c), 0.5);
  EXPECT_THROW(exact_auc(c), std::logic_error);
}

TEST(Grid, UniformGridAndResample) {
  const auto g = uniform_grid(4);
  EXPECT_EQ(g, (std::vector<double>{0.25, 0.5, 0.75}));
  EXPECT_THROW(uniform_grid(1), std::invalid_argument);
  const RocCurve r = resample(RocCurve(two_segment()), g);
  const std::vector<Point> expected{{0, 0}, {0.25, 0.375}, {0.5, 0.75}, {0.75, 0.875}, {1, 1}};
  EXPECT_EQ(r.curve().vertices(), expected);
  EXPECT_DOUBLE_EQ(sup_distance(r, RocCurve(two_segment()), uniform_grid(100)), 0.0);
}

TEST(Csv, ExactRoundTripIsExact) {
  std::stringstream s;
  write_csv(s, two_segment());
  EXPECT_EQ(s.str(), "# kind=exact\nx_lo,x_hi,slope,intercept\n0,1/2,3/2,0\n1/2,1,1/2,1/2\n");
  EXPECT_EQ(read_csv(s), two_segment());
}

TEST(Csv, SampledRoundTripKeepsEveryBit) {
  const auto c = PiecewiseCurve::sampled({{0, 0}, {0.1, 1.0 / 3.0}, {2.0 / 7.0, 0.7071067811865476}, {1, 1}});
  std::stringstream s;
  write_csv(s, c);
  EXPECT_EQ(read_csv(s), c);
  const auto st = PiecewiseCurve::staircase({{0, 0}, {0, 0.5}, {1, 0.5}, {1, 1}});
  std::stringstream t;
  write_csv(t, st);
  const auto back = read_csv(t);
  EXPECT_EQ(back.kind(), CurveKind::staircase);
  EXPECT_EQ(back, st);
}

TEST(Csv, RejectsMalformedInput) {
  for (const char* bad : {"", "fpr,tpr\n0,0\n1,1\n", "# kind=sampled\nx,y\n0,0\n1,1\n",
                          "# kind=sampled\nfpr,tpr\n0,0\n1\n", "# kind=sampled\nfpr,tpr\n0,zero\n1,1\n",
                          "# kind=wobbly\nfpr,tpr\n0,0\n1,1\n"}) {
    std::stringstream s(bad);
    EXPECT_THROW(read_csv(s), std::invalid_argument) << bad;
  }
}
