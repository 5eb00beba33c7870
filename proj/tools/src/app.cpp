#include "lroc_cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lroc/binormal.hpp"
#include "lroc/compare.hpp"
#include "lroc/empirical_roc.hpp"
#include "lroc/error.hpp"
#include "lroc/flexible_bayes.hpp"
#include "lroc/gaussian_fit.hpp"
#include "lroc/roc_core.hpp"
#include "lroc_cli/csv_data.hpp"

namespace lroc::cli {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, std::string>& builtin_examples() {
  static const std::map<std::string, std::string> examples{
      {"three-rectangles",
       "model = piecewise\n"
       "breakpoints = [0, 1, 2, 3]\n"
       "density_minus = [1/3, 1/3, 1/3]\n"
       "density_plus = [1/18, 10/18, 7/18]\n"},
      {"finite-table",
       "model = table\n"
       "labels = [--, -, +-, +, ++]\n"
       "counts_minus = [33, 6, 6, 11, 2]\n"
       "counts_plus = [3, 2, 2, 11, 33]\n"},
      {"gaussian-4.3",
       "model = gaussian\n"
       "mean_minus = [0, 0]\n"
       "cov_minus = [[1, 0], [0, 1]]\n"
       "mean_plus = [1, 2]\n"
       "cov_plus = [[4, 0], [0, 16]]\n"},
      {"polya-poisson",
       "model = polya-poisson\n"
       "rate = 1\n"
       "failures = 5\n"},
  };
  return examples;
}

// Concavity slack for Monte Carlo curves built from B draws per class.
double mc_tolerance(std::size_t replications) { return 3.0 / std::sqrt(static_cast<double>(replications)); }

constexpr double kAnalyticTolerance = 1e-9;

json curve_json(const NamedCurve& c, double tolerance) {
  json j;
  j["label"] = c.label;
  j["kind"] = std::string(to_string(c.curve.kind()));
  if (c.curve.kind() == CurveKind::exact) j["exact_auc"] = format_rational(exact_auc(c.curve));
  j["auc"] = auc(c.curve);
  if (c.curve.kind() == CurveKind::staircase)
    j["concave"] = nullptr;
  else
    j["concave"] = c.curve.is_concave(tolerance);
  j["vertices"] = c.curve.curve().vertices().size();
  return j;
}

// i/100 plus the interior breakpoints of exact curves.
std::vector<double> comparison_grid(const std::vector<NamedCurve>& curves) {
  std::vector<double> grid = uniform_grid(100);
  for (const auto& c : curves)
    if (c.curve.kind() == CurveKind::exact)
      for (const auto& p : c.curve.curve().vertices())
        if (p.x > 0.0 && p.x < 1.0) grid.push_back(p.x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

json comparison_json(const NamedCurve& a, const NamedCurve& b, std::span<const double> grid, double slack) {
  const ComparisonReport r = compare_curves(a.curve, b.curve, grid, slack);
  json j;
  j["a"] = a.label;
  j["b"] = b.label;
  j["slack"] = slack;
  j["verdict"] = std::string(to_string(r.verdict));
  j["max_abs_difference"] = r.max_abs_difference;
  j["argmax"] = r.argmax;
  j["auc_a"] = r.auc_a;
  j["auc_b"] = r.auc_b;
  j["auc_difference"] = r.auc_difference;
  j["grid"] = r.grid;
  j["differences"] = r.differences;
  return j;
}

json atoms_json(const LrDistribution& d) {
  json atoms = json::array();
  for (const auto& a : d.exact_atoms())
    atoms.push_back({{"value", format_rational(a.value)},
                     {"mass_minus", format_rational(a.mass_minus)},
                     {"mass_plus", format_rational(a.mass_plus)}});
  return atoms;
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

RocCurve mc_curve(const LrDistribution& d, std::size_t grid) { return resample(proper_roc(d), uniform_grid(grid)); }

RunResult piecewise_result(const PiecewiseConstantPair& m) {
  const LrDistribution d = lr_distribution_piecewise(m);
  RunResult r{{{"lr", proper_roc(d)}, {"score", score_roc_piecewise(m)}}, json::object()};
  r.report["model"] = "piecewise";
  r.report["atoms"] = atoms_json(d);
  r.report["curves"] = {curve_json(r.curves[0], 0.0), curve_json(r.curves[1], 0.0)};
  const auto grid = comparison_grid(r.curves);
  r.report["comparisons"] = {comparison_json(r.curves[0], r.curves[1], grid, 0.0)};
  return r;
}

RunResult table_result(const FiniteTablePair& m) {
  const LrDistribution d = finite_lr_distribution(m);
  const auto [minus, plus] = ordinal_scores(m);
  RunResult r{{{"lr", proper_roc(d)}, {"ordinal", empirical_roc(minus, plus)}}, json::object()};
  r.report["model"] = "table";
  r.report["atoms"] = atoms_json(d);
  json points = json::array();
  for (const auto& [x, y] : roc_points(d)) points.push_back({format_rational(x), format_rational(y)});
  r.report["roc_points"] = points;
  r.report["curves"] = {curve_json(r.curves[0], 0.0), curve_json(r.curves[1], 0.0)};
  const auto grid = comparison_grid(r.curves);
  r.report["comparisons"] = {comparison_json(r.curves[0], r.curves[1], grid, 0.0)};
  return r;
}

RunResult gaussian_result(const GaussianPair& m, std::size_t replications, std::uint64_t seed, std::size_t grid) {
  const BinormalParameters ab = su_liu_binormal(m);
  RunResult r{{{"qda", mc_curve(gaussian_lr_sample(m, replications, seed), grid)},
               {"linear", binormal_roc(ab.a, ab.b, uniform_grid(grid))}},
              json::object()};
  r.report["model"] = "gaussian";
  r.report["replications"] = replications;
  r.report["seed"] = seed;
  r.report["su_liu_coefficients"] = vector_json(su_liu_coefficients(m));
  r.report["binormal"] = {{"a", ab.a}, {"b", ab.b}};
  r.report["curves"] = {curve_json(r.curves[0], mc_tolerance(replications)),
                        curve_json(r.curves[1], kAnalyticTolerance)};
  r.report["comparisons"] = {comparison_json(r.curves[0], r.curves[1], comparison_grid(r.curves), 0.005)};
  return r;
}

RunResult point_process_result(const PointProcessPair& m, std::size_t replications, std::uint64_t seed,
                               std::size_t grid) {
  RunResult r{{{"lr", mc_curve(simulate_processes(m, replications, seed), grid)}}, json::object()};
  const double horizon = m.failures() / m.rate();
  auto mean_count = [&](ProcessKind kind) {
    const auto counts = simulate_counts(kind, m.rate(), horizon, replications, seed);
    double total = 0.0;
    for (auto c : counts) total += static_cast<double>(c);
    return total / static_cast<double>(counts.size());
  };
  r.report["model"] = "polya-poisson";
  r.report["rate"] = m.rate();
  r.report["failures"] = m.failures();
  r.report["replications"] = replications;
  r.report["seed"] = seed;
  r.report["lr_minimum_time"] = horizon;
  r.report["mean_count"] = {{"horizon", horizon},
                            {"expected", m.rate() * horizon},
                            {"poisson", mean_count(ProcessKind::poisson)},
                            {"polya", mean_count(ProcessKind::polya)}};
  r.report["curves"] = {curve_json(r.curves[0], mc_tolerance(replications))};
  return r;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  return in;
}

NamedCurve data_curve(const std::string& method, const LabeledSample& sample, const RunConfig& config,
                      json& report) {
  if (method == "qda") {
    const GaussianPair m = fit_gaussian_pair(sample);
    return {"qda", mc_curve(gaussian_lr_sample(m, config.replications, config.seed), config.grid)};
  }
  if (method == "linear") {
    const GaussianPair m = fit_gaussian_pair(sample);
    const BinormalParameters ab = su_liu_binormal(m);
    report["su_liu_coefficients"] = vector_json(su_liu_coefficients(m));
    report["binormal"] = {{"a", ab.a}, {"b", ab.b}};
    return {"linear", binormal_roc(ab.a, ab.b, uniform_grid(config.grid))};
  }
  const KernelDensityEstimate kde = fit_kde(sample, parse_bandwidth_rule(config.bandwidth));
  json bandwidths = json::object();
  for (ClassLabel c : {ClassLabel::negative, ClassLabel::positive}) {
    std::vector<double> h;
    for (std::size_t k = 0; k < kde.dimension(); ++k) h.push_back(kde.bandwidth(c, k));
    bandwidths[c == ClassLabel::negative ? "negative" : "positive"] = h;
  }
  report["bandwidths"] = bandwidths;
  if (method == "flexible-bayes") {
    RocGrid grid;
    grid.size = config.grid;
    grid.replications = config.replications;
    grid.seed = config.seed;
    return {"flexible-bayes", algorithm1_roc(kde, grid)};
  }
  if (method == "empirical") {
    const auto minus = flexible_bayes_scores(kde, sample.rows(ClassLabel::negative));
    const auto plus = flexible_bayes_scores(kde, sample.rows(ClassLabel::positive));
    return {"empirical", empirical_roc(minus, plus)};
  }
  if (method == "exact-model")
    throw UsageError("method exact-model needs an analytic model; use 'lroc model <config>' or 'lroc example'");
  throw UsageError("unknown method '" + method + "'");
}

std::string stem_of(const std::string& path) {
  constexpr std::string_view ext = ".csv";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return path.substr(0, path.size() - ext.size());
  return path;
}

void write_curve_file(const std::string& path, const RocCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_csv(out, curve.curve());
  if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace

RunResult run_example(const RunConfig& config) {
  const auto& examples = builtin_examples();
  const auto it = examples.find(config.input);
  if (it == examples.end()) {
    std::string names;
    for (const auto& [name, text] : examples) names += (names.empty() ? "" : ", ") + name;
    throw UsageError("unknown example '" + config.input + "' (available: " + names + ")");
  }
  RunResult r = run_model(parse_model_config_string(it->second), config);
  json report{{"example", config.input}};
  report.update(r.report);
  r.report = std::move(report);
  return r;
}

RunResult run_model(const ModelConfig& model, const RunConfig& config) {
  const std::size_t replications =
      config.replications_given ? config.replications : model.replications.value_or(config.replications);
  const std::uint64_t seed = config.seed_given ? config.seed : model.seed.value_or(config.seed);
  if (replications < 1) throw DataError("replications must be at least 1");
  return std::visit(
      [&](const auto& m) -> RunResult {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PiecewiseConstantPair>) return piecewise_result(m);
        else if constexpr (std::is_same_v<T, FiniteTablePair>) return table_result(m);
        else if constexpr (std::is_same_v<T, GaussianPair>) return gaussian_result(m, replications, seed, config.grid);
        else return point_process_result(m, replications, seed, config.grid);
      },
      model.model);
}

RunResult run_csv(const RunConfig& config) {
  if (!config.positive_label) throw UsageError("--positive is required: name the label value of the positive class");
  std::ifstream in = open_input(config.input);
  const LabeledSample sample = read_labeled_csv(in, config.label_column, *config.positive_label);

  std::vector<std::string> methods{config.method};
  if (config.subcommand == "compare")
    for (const char* m : {"qda", "linear", "flexible-bayes", "empirical"})
      if (m != config.method) methods.emplace_back(m);

  RunResult r{{}, json::object()};
  r.report["command"] = config.subcommand;
  r.report["input"] = config.input;
  r.report["method"] = config.method;
  r.report["n_negative"] = sample.count(ClassLabel::negative);
  r.report["n_positive"] = sample.count(ClassLabel::positive);
  r.report["features"] = sample.feature_names();
  r.report["replications"] = config.replications;
  r.report["seed"] = config.seed;
  for (const auto& m : methods) r.curves.push_back(data_curve(m, sample, config, r.report));

  json curves = json::array();
  for (const auto& c : r.curves)
    curves.push_back(curve_json(c, c.label == "linear" ? kAnalyticTolerance : mc_tolerance(config.replications)));
  r.report["curves"] = curves;
  json comparisons = json::array();
  const auto grid = comparison_grid(r.curves);
  for (std::size_t i = 1; i < r.curves.size(); ++i)
    comparisons.push_back(comparison_json(r.curves[0], r.curves[i], grid, 0.0));
  r.report["comparisons"] = comparisons;
  return r;
}

void write_outputs(const RunResult& result, const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.out_csv.empty()) {
    write_csv(out, result.curves.front().curve.curve());
  } else {
    write_curve_file(config.out_csv, result.curves.front().curve);
    const std::string stem = stem_of(config.out_csv);
    for (std::size_t i = 1; i < result.curves.size(); ++i)
      write_curve_file(stem + "." + result.curves[i].label + ".csv", result.curves[i].curve);
  }
  if (!config.out_svg.empty()) emit_svg(config.out_svg, result.curves);
  const std::string report = result.report.dump(2) + "\n";
  if (config.out_report.empty()) {
    err << report;
  } else {
    std::ofstream rep(config.out_report, std::ios::binary);
    if (!rep) throw DataError("cannot write '" + config.out_report + "'");
    rep << report;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string positive;
  CLI::App app{"Proper ROC curves from likelihood-ratio rules", "lroc"};
  app.require_subcommand(1);

  auto* example = app.add_subcommand("example", "Run a built-in model: three-rectangles, finite-table, "
                                                "gaussian-4.3, polya-poisson");
  auto* roc = app.add_subcommand("roc", "Estimate one ROC curve from labelled CSV data");
  auto* compare = app.add_subcommand("compare", "Estimate and compare all data methods on labelled CSV data");
  auto* model = app.add_subcommand("model", "Run a model described by a key = value config file");
  example->add_option("name", config.input, "Example name")->required();
  roc->add_option("csv", config.input, "Input CSV")->required();
  compare->add_option("csv", config.input, "Input CSV")->required();
  model->add_option("config", config.input, "Model config file")->required();

  for (auto* sub : {example, roc, compare, model}) {
    sub->add_option("--grid", config.grid, "Grid size: thresholds or output FPR points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24))
        ->capture_default_str();
    sub->add_option("--replications", config.replications, "Monte Carlo draws per class (B)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30))
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    sub->add_option("--out-csv", config.out_csv, "Curve CSV path (default: stdout)");
    sub->add_option("--out-svg", config.out_svg, "SVG plot path");
    sub->add_option("--out-report", config.out_report, "JSON report path (default: stderr)");
  }
  for (auto* sub : {roc, compare}) {
    sub->add_option("--label-col", config.label_column, "Name of the label column")->capture_default_str();
    sub->add_option("--positive", positive, "Label value of the positive class (required)");
    sub->add_option("--method", config.method, "Curve method")
        ->check(CLI::IsMember({"exact-model", "qda", "linear", "flexible-bayes", "empirical"}))
        ->capture_default_str();
    sub->add_option("--bandwidth", config.bandwidth, "silverman, scott or fixed:v1,v2,...")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (auto* sub : {example, roc, compare, model})
    if (sub->parsed()) {
      config.subcommand = sub->get_name();
      config.replications_given = sub->count("--replications") > 0;
      config.seed_given = sub->count("--seed") > 0;
      if ((sub == roc || sub == compare) && sub->count("--positive") > 0) config.positive_label = positive;
    }

  try {
    RunResult result;
    if (config.subcommand == "example") {
      result = run_example(config);
    } else if (config.subcommand == "model") {
      std::ifstream in = open_input(config.input);
      result = run_model(parse_model_config(in), config);
    } else {
      if (config.subcommand == "roc" || config.subcommand == "compare") parse_bandwidth_rule(config.bandwidth);
      result = run_csv(config);
    }
    write_outputs(result, config, out, err);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "lroc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "lroc: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "lroc: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace lroc::cli
