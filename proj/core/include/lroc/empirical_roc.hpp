#pragma once

#include <span>

#include "lroc/roc_curve.hpp"

namespace lroc {

// Staircase of "positive iff score >= c" over every distinct score c, from
// (0,0) to (1,1). Tied scores across classes give a diagonal step.
RocCurve empirical_roc(std::span<const double> scores_minus, std::span<const double> scores_plus);

}  // namespace lroc
