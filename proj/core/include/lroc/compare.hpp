#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lroc/roc_curve.hpp"

namespace lroc {

enum class Dominance { equivalent, a_dominates, b_dominates, neither };

std::string_view to_string(Dominance d);

struct ComparisonReport {
  std::vector<double> grid;
  std::vector<double> differences;  // a(x) - b(x) per grid point
  double max_abs_difference = 0.0;
  double argmax = 0.0;              // first grid point attaining the maximum
  double auc_a = 0.0;
  double auc_b = 0.0;
  double auc_difference = 0.0;      // auc_a - auc_b
  Dominance verdict = Dominance::equivalent;
};

// "a dominates b" iff a(x) >= b(x) - slack at every grid point (and not the
// reverse); equivalent when both hold.
ComparisonReport compare_curves(const RocCurve& a, const RocCurve& b, std::span<const double> grid,
                                double slack = 0.0);

}  // namespace lroc
