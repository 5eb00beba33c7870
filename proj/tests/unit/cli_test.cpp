#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "lroc/roc_curve.hpp"
#include "lroc_cli/app.hpp"

namespace fs = std::filesystem;
using namespace lroc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lroc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  const fs::path dir = LROC_TEST_TMPDIR;
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Two features; the positive class differs in both mean and spread.
std::string synthetic_csv(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  std::ostringstream s;
  s.precision(10);
  s << "x1,x2,label\n";
  for (std::size_t i = 0; i < n; ++i) {
    s << z(rng) << ',' << z(rng) << ",neg\n";
    s << 1.0 + 2.0 * z(rng) << ',' << 2.0 + 4.0 * z(rng) << ",pos\n";
  }
  return s.str();
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

double auc_of(const nlohmann::json& report, const std::string& label) {
  for (const auto& c : report["curves"])
    if (c["label"] == label) return c["auc"].get<double>();
  ADD_FAILURE() << "no curve " << label;
  return 0.0;
}

}  // namespace

TEST(Cli, HelpListsDefaultsAndExitsZero) {
  const auto r = run_cli({"roc", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("512"), std::string::npos);
  EXPECT_NE(r.out.find("100000"), std::string::npos);
  EXPECT_NE(r.out.find("flexible-bayes"), std::string::npos);
  EXPECT_NE(r.out.find("silverman"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"example", "no-such-model"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"example", "finite-table", "--grid", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"example", "finite-table", "--replications", "0"}).code, cli::kExitUsage);
  const fs::path csv = tmp("usage.csv");
  write_file(csv, synthetic_csv(20, 1));
  EXPECT_EQ(run_cli({"roc", csv.string()}).code, cli::kExitUsage);  // --positive missing
  EXPECT_EQ(run_cli({"roc", csv.string(), "--positive", "pos", "--method", "magic"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"roc", csv.string(), "--positive", "pos", "--method", "exact-model"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"roc", csv.string(), "--positive", "pos", "--bandwidth", "wide"}).code, cli::kExitUsage);
}

TEST(Cli, DataErrorsExitThreeWithLocation) {
  const fs::path bad = tmp("bad.csv");
  write_file(bad, "x1,x2,label\n1,2,pos\n3,oops,neg\n");
  auto r = run_cli({"roc", bad.string(), "--positive", "pos"});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("row 3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("x2"), std::string::npos) << r.err;

  const fs::path one_class = tmp("one_class.csv");
  write_file(one_class, "x1,label\n1,pos\n2,pos\n3,pos\n");
  EXPECT_EQ(run_cli({"roc", one_class.string(), "--positive", "pos"}).code, cli::kExitData);

  EXPECT_EQ(run_cli({"roc", tmp("missing.csv").string(), "--positive", "pos"}).code, cli::kExitData);

  const fs::path constant = tmp("constant.csv");
  write_file(constant, "x1,label\n1,pos\n1,pos\n1,neg\n2,neg\n");
  r = run_cli({"roc", constant.string(), "--positive", "pos"});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("zero variance"), std::string::npos) << r.err;

  EXPECT_EQ(run_cli({"example", "finite-table", "--out-csv", "/nonexistent/dir/x.csv"}).code, cli::kExitData);
}

TEST(Cli, FiniteTableExampleWritesExactVertices) {
  const auto r = run_cli({"example", "finite-table"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const PiecewiseCurve curve = read_csv(in);
  ASSERT_TRUE(curve.is_exact());
  // The two middle categories share one LR value and merge into one segment.
  ASSERT_EQ(curve.segments().size(), 4u);
  const std::vector<std::pair<Rational, Rational>> expected{
      {0, 0}, {Rational(1, 29), Rational(11, 17)}, {Rational(13, 58), Rational(44, 51)},
      {Rational(25, 58), Rational(16, 17)}, {1, 1}};
  for (std::size_t k = 0; k < curve.segments().size(); ++k) {
    const auto& s = curve.segments()[k];
    EXPECT_EQ(s.x_lo, expected[k].first);
    EXPECT_EQ(s.at(s.x_lo), expected[k].second);
    EXPECT_EQ(s.at(s.x_hi), expected[k + 1].second);
  }
  const auto report = nlohmann::json::parse(r.err);
  EXPECT_EQ(report["example"], "finite-table");
  EXPECT_EQ(report["roc_points"].size(), 6u);
  EXPECT_EQ(report["curves"][1]["kind"], "staircase");
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const fs::path csv = tmp("repeat.csv");
  write_file(csv, synthetic_csv(60, 3));
  for (const std::string method : {"flexible-bayes", "qda"}) {
    const std::vector<std::string> args{"roc", csv.string(), "--positive", "pos", "--method", method,
                                        "--replications", "5000", "--seed", "9"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
  const auto g1 = run_cli({"example", "gaussian-4.3", "--replications", "4000"});
  const auto g2 = run_cli({"example", "gaussian-4.3", "--replications", "4000"});
  EXPECT_EQ(g1.out, g2.out);
  const auto g3 = run_cli({"example", "gaussian-4.3", "--replications", "4000", "--seed", "2"});
  EXPECT_NE(g1.out, g3.out);
}

TEST(Cli, SvgHasOnePolylinePerCurveWithDistinctStyles) {
  const fs::path svg = tmp("table.svg");
  const auto r = run_cli({"example", "finite-table", "--out-svg", svg.string(), "--out-report",
                          tmp("table.json").string(), "--out-csv", tmp("table.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(svg);
  EXPECT_EQ(text.rfind("<svg", 0) == 0 || text.rfind("<?xml", 0) == 0, true);
  EXPECT_EQ(count_of(text, "<polyline"), 2u);
  EXPECT_EQ(count_of(text, "class=\"reference\""), 1u);

  std::regex poly("<polyline[^>]*stroke=\"([^\"]*)\"[^>]*points=\"([^\"]*)\"");
  std::vector<std::string> points, strokes;
  for (std::sregex_iterator it(text.begin(), text.end(), poly), end; it != end; ++it) {
    strokes.push_back((*it)[1]);
    points.push_back((*it)[2]);
  }
  ASSERT_EQ(points.size(), 2u);
  EXPECT_NE(strokes[0], strokes[1]);
  EXPECT_EQ(count_of(points[0], ","), 5u);  // exact curve: five vertices

  EXPECT_TRUE(fs::exists(tmp("table.csv")));
  EXPECT_TRUE(fs::exists(tmp("table.ordinal.csv")));
  EXPECT_TRUE(nlohmann::json::parse(slurp(tmp("table.json"))).contains("roc_points"));
}

TEST(Cli, EmpiricalMethodIsAStaircase) {
  const fs::path csv = tmp("emp.csv");
  write_file(csv, synthetic_csv(40, 5));
  const auto r = run_cli({"roc", csv.string(), "--positive", "pos", "--method", "empirical"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# kind=staircase\n", 0), 0u);
}

TEST(Cli, CompareOnGaussianDataRanksQdaAboveLinear) {
  const fs::path csv = tmp("compare.csv");
  write_file(csv, synthetic_csv(400, 11));
  const auto r = run_cli({"compare", csv.string(), "--positive", "pos", "--method", "qda", "--replications",
                          "20000", "--out-csv", tmp("compare_curve.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = nlohmann::json::parse(r.err);
  ASSERT_EQ(report["curves"].size(), 4u);
  EXPECT_GE(auc_of(report, "qda") + 3.0 / std::sqrt(20000.0), auc_of(report, "linear"));
  for (const char* label : {"linear", "flexible-bayes", "empirical"})
    EXPECT_TRUE(fs::exists(tmp(std::string("compare_curve.") + label + ".csv"))) << label;
  // In-sample scores are optimistic relative to the smoothed Monte Carlo curve.
  EXPECT_GE(auc_of(report, "empirical") + 0.02, auc_of(report, "flexible-bayes"));
}

TEST(Cli, ModelSubcommandReadsConfigFile) {
  const fs::path cfg = tmp("model.cfg");
  write_file(cfg,
             "# two rectangles\n"
             "model = piecewise\n"
             "breakpoints = [0, 1, 2]\n"
             "density_minus = [3/4, 1/4]\n"
             "density_plus = [1/4, 3/4]\n");
  const auto r = run_cli({"model", cfg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const PiecewiseCurve c = read_csv(in);
  ASSERT_EQ(c.segments().size(), 2u);
  EXPECT_EQ(c.segments()[0].slope, 3);
  EXPECT_EQ(c.segments()[1].slope, Rational(1, 3));

  write_file(cfg, "model = piecewise\nbreakpoints = [0, 1]\ndensity_plus = [1]\n");
  const auto bad = run_cli({"model", cfg.string()});
  EXPECT_EQ(bad.code, cli::kExitData);
  EXPECT_NE(bad.err.find("density_minus"), std::string::npos) << bad.err;
}

TEST(Cli, CurveCsvRoundTripsThroughReader) {
  const auto r = run_cli({"example", "polya-poisson", "--replications", "3000", "--grid", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const PiecewiseCurve c = read_csv(in);
  EXPECT_EQ(c.kind(), CurveKind::sampled);
  std::ostringstream again;
  write_csv(again, c);
  EXPECT_EQ(again.str(), r.out);
}
