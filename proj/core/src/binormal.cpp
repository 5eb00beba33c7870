#include "lroc/binormal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lroc/normal.hpp"

namespace lroc {

BinormalParameters binormal_parameters(double mean_minus, double sd_minus, double mean_plus, double sd_plus) {
  if (!(sd_minus > 0) || !(sd_plus > 0)) throw std::invalid_argument("binormal: standard deviations must be positive");
  return {(mean_plus - mean_minus) / sd_plus, sd_minus / sd_plus};
}

BinormalParameters su_liu_binormal(const GaussianPair& m) {
  const ScoreMoments s = su_liu_moments(m);
  return binormal_parameters(s.mean_minus, std::sqrt(s.variance_minus), s.mean_plus, std::sqrt(s.variance_plus));
}

double binormal_value(BinormalParameters p, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return normal_cdf(p.a + p.b * normal_quantile(x));
}

RocCurve binormal_roc(double a, double b, std::span<const double> grid) {
  if (!(b > 0)) throw std::invalid_argument("binormal ROC needs b > 0");
  std::vector<Point> pts;
  pts.reserve(grid.size() + 2);
  pts.push_back({0.0, 0.0});
  for (double x : grid) {
    if (!(x > 0.0 && x < 1.0) || x <= pts.back().x)
      throw std::invalid_argument("binormal grid must be strictly increasing inside (0,1)");
    pts.push_back({x, binormal_value({a, b}, x)});
  }
  pts.push_back({1.0, 1.0});
  return RocCurve(PiecewiseCurve::sampled(std::move(pts)));
}

}  // namespace lroc
