#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lroc/model_config.hpp"
#include "lroc_cli/svg.hpp"

namespace lroc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

struct RunConfig {
  std::string subcommand;
  std::string input;  // example name, CSV path or model config path
  std::string label_column = "label";
  std::optional<std::string> positive_label;
  std::string method = "flexible-bayes";
  std::string bandwidth = "silverman";
  std::size_t grid = 512;
  std::size_t replications = 100000;
  std::uint64_t seed = 1;
  bool replications_given = false;
  bool seed_given = false;
  std::string out_csv;
  std::string out_svg;
  std::string out_report;
};

// Curves in output order (the first is the primary curve) plus a report.
struct RunResult {
  std::vector<NamedCurve> curves;
  nlohmann::ordered_json report;
};

RunResult run_example(const RunConfig& config);
RunResult run_model(const ModelConfig& model, const RunConfig& config);
RunResult run_csv(const RunConfig& config);

// Primary curve to --out-csv (stdout if absent), further curves to
// <stem>.<label>.csv next to it, report to --out-report (stderr if absent).
void write_outputs(const RunResult& result, const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line: parse, run, write. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lroc::cli
