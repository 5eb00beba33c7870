#include "lroc/compare.hpp"

#include <cmath>
#include <stdexcept>

namespace lroc {

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::equivalent: return "equivalent";
    case Dominance::a_dominates: return "a dominates b";
    case Dominance::b_dominates: return "b dominates a";
    case Dominance::neither: return "neither dominates";
  }
  throw std::invalid_argument("bad dominance value");
}

ComparisonReport compare_curves(const RocCurve& a, const RocCurve& b, std::span<const double> grid, double slack) {
  if (grid.empty()) throw std::invalid_argument("comparison grid is empty");
  if (!(slack >= 0)) throw std::invalid_argument("slack must be nonnegative");
  ComparisonReport r;
  r.grid.assign(grid.begin(), grid.end());
  bool a_ok = true;
  bool b_ok = true;
  for (double x : grid) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("comparison grid must lie in [0,1]");
    const double d = a(x) - b(x);
    r.differences.push_back(d);
    if (std::abs(d) > r.max_abs_difference) {
      r.max_abs_difference = std::abs(d);
      r.argmax = x;
    }
    a_ok = a_ok && d >= -slack;
    b_ok = b_ok && d <= slack;
  }
  if (r.max_abs_difference == 0.0) r.argmax = grid.front();
  r.auc_a = auc(a);
  r.auc_b = auc(b);
  r.auc_difference = r.auc_a - r.auc_b;
  r.verdict = a_ok && b_ok ? Dominance::equivalent
              : a_ok       ? Dominance::a_dominates
              : b_ok       ? Dominance::b_dominates
                           : Dominance::neither;
  return r;
}

}  // namespace lroc
