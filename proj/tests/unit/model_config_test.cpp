#include <gtest/gtest.h>

#include "lroc/error.hpp"
#include "lroc/model_config.hpp"
#include "lroc/roc_core.hpp"

using namespace lroc;

TEST(ModelConfig, ParsesEveryFamily) {
  const auto pw = parse_model_config_string(
      "model = piecewise\nbreakpoints = [0, 1, 2, 3]\ndensity_minus = [1/3, 1/3, 1/3]\n"
      "density_plus = [1/18, 10/18, 7/18]  # not monotone\n");
  ASSERT_TRUE(std::holds_alternative<PiecewiseConstantPair>(pw.model));
  EXPECT_EQ(proper_roc(lr_distribution_piecewise(std::get<PiecewiseConstantPair>(pw.model))).curve().segments().size(), 3u);

  const auto tb = parse_model_config_string(
      "model = table\nlabels = [--, -, +-, +, ++]\ncounts_minus = [33, 6, 6, 11, 2]\ncounts_plus = [3, 2, 2, 11, 33]\n");
  ASSERT_TRUE(std::holds_alternative<FiniteTablePair>(tb.model));
  EXPECT_EQ(std::get<FiniteTablePair>(tb.model).labels()[2], "+-");

  const auto g = parse_model_config_string(
      "model = gaussian\nmean_minus = [0, 0]\ncov_minus = [[1, 0], [0, 1]]\nmean_plus = [1, 2]\n"
      "cov_plus = [[4, 0], [0, 16]]\nreplications = 5000\nseed = 12\n");
  ASSERT_TRUE(std::holds_alternative<GaussianPair>(g.model));
  EXPECT_EQ(std::get<GaussianPair>(g.model).covariance(ClassLabel::positive)(1, 1), 16.0);
  EXPECT_EQ(g.replications, 5000u);
  EXPECT_EQ(g.seed, 12u);

  const auto pp = parse_model_config_string("model = polya-poisson\nrate = 0.5\nfailures = 4\n");
  ASSERT_TRUE(std::holds_alternative<PointProcessPair>(pp.model));
  EXPECT_EQ(std::get<PointProcessPair>(pp.model).failures(), 4);
  EXPECT_EQ(std::get<PointProcessPair>(pp.model).rate(), 0.5);
  EXPECT_FALSE(pp.replications.has_value());
}

TEST(ModelConfig, ErrorsCarryLineNumbers) {
  auto message = [](const std::string& text) {
    try {
      parse_model_config_string(text);
    } catch (const DataError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("model = polya-poisson\nrate 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nrate = 1\nfailures = 2\ncolour = red\n").find("unknown key 'colour'"),
            std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nrate = [1\nfailures = 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nrate = 1\nrate = 2\nfailures = 1\n").find("duplicate"), std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nfailures = 2\n").find("missing key 'rate'"), std::string::npos);
  EXPECT_NE(message("model = spline\n").find("unknown model"), std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nrate = one\nfailures = 2\n").find("not a number"), std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nrate = 1\nfailures = 2.5\n").find("integer"), std::string::npos);
  EXPECT_NE(message("model = polya-poisson\nrate = -1\nfailures = 2\n").find("positive"), std::string::npos);
  EXPECT_NE(message("model = table\nlabels = [a, b]\ncounts_minus = [1, 0]\ncounts_plus = [1, 1]\n").find("model config"),
            std::string::npos);
}
