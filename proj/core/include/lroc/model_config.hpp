#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "lroc/finite_table.hpp"
#include "lroc/gaussian_model.hpp"
#include "lroc/piecewise_model.hpp"
#include "lroc/point_process.hpp"

namespace lroc {

using ModelSpec = std::variant<PiecewiseConstantPair, FiniteTablePair, GaussianPair, PointProcessPair>;

struct ModelConfig {
  ModelSpec model;
  std::optional<std::size_t> replications;
  std::optional<std::uint64_t> seed;
};

/// Parses a model description of `key = value` lines. Values are numbers
/// (integers, decimals or a/b), bare words, vectors `[a, b, ...]` or matrices
/// `[[a, b], [c, d]]`; `#` starts a comment. The `model` key selects the family:
///
///   model = piecewise      breakpoints, density_minus, density_plus
///   model = table          labels, counts_minus, counts_plus
///   model = gaussian       mean_minus, cov_minus, mean_plus, cov_plus
///   model = polya-poisson  rate, failures
///
/// plus optional `replications` and `seed`. Throws DataError with a line
/// number on malformed input.
ModelConfig parse_model_config(std::istream& in);
ModelConfig parse_model_config_string(const std::string& text);

}  // namespace lroc
