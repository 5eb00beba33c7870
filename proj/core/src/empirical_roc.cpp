#include "lroc/empirical_roc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lroc {

RocCurve empirical_roc(std::span<const double> scores_minus, std::span<const double> scores_plus) {
  if (scores_minus.empty() || scores_plus.empty())
    throw std::invalid_argument("empirical ROC needs scores from both classes");
  std::vector<double> minus(scores_minus.begin(), scores_minus.end());
  std::vector<double> plus(scores_plus.begin(), scores_plus.end());
  for (const auto* v : {&minus, &plus})
    for (double s : *v)
      if (std::isnan(s)) throw std::invalid_argument("scores must not be NaN");
  std::sort(minus.begin(), minus.end(), std::greater<>());
  std::sort(plus.begin(), plus.end(), std::greater<>());

  const double n_minus = static_cast<double>(minus.size());
  const double n_plus = static_cast<double>(plus.size());
  std::vector<Point> pts{{0.0, 0.0}};
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < minus.size() || j < plus.size()) {
    double c;
    if (j == plus.size() || (i < minus.size() && minus[i] >= plus[j]))
      c = minus[i];
    else
      c = plus[j];
    while (i < minus.size() && minus[i] == c) ++i;
    while (j < plus.size() && plus[j] == c) ++j;
    pts.push_back({static_cast<double>(i) / n_minus, static_cast<double>(j) / n_plus});
  }
  return RocCurve(PiecewiseCurve::staircase(std::move(pts)));
}

}  // namespace lroc
