#include "lroc/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lroc/roc_core.hpp"

namespace lroc {

ConcentrationFunction::ConcentrationFunction(PiecewiseCurve curve) : curve_(std::move(curve)) {
  if (curve_.is_exact()) {
    if (curve_.exact_at(0) != 0 || curve_.exact_at(1) != 1)
      throw std::invalid_argument("concentration function must pass through (0,0) and (1,1)");
    for (const auto& s : curve_.segments()) {
      if (s.slope < 0) throw std::invalid_argument("concentration function must be nondecreasing");
      if (s.at(s.x_lo) > s.x_lo) throw std::invalid_argument("concentration function must lie below the diagonal");
    }
    return;
  }
  const auto& pts = curve_.vertices();
  if (pts.front().y != 0.0 || std::abs(pts.back().y - 1.0) > 1e-12)
    throw std::invalid_argument("concentration function must pass through (0,0) and (1,1)");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].y < pts[i - 1].y - 1e-12)
      throw std::invalid_argument("concentration function must be nondecreasing");
}

bool ConcentrationFunction::is_convex(double tolerance) const {
  if (curve_.is_exact()) {
    const auto& segs = curve_.segments();
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].slope < segs[i - 1].slope) return false;
    return true;
  }
  return convexity_violation(curve_.vertices()) <= tolerance;
}

Rational concentration_value(const LrDistribution& d, const Rational& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("concentration argument outside [0,1]");
  if (x == 0) return 0;
  if (x == 1) return 1;
  const Rational q = quantile_minus(d, x);
  return d.cdf_plus_left(q) + q * (x - d.cdf_minus_left(q));
}

ConcentrationFunction concentration(const LrDistribution& d) {
  if (d.is_exact()) {
    const auto atoms = d.exact_atoms();
    const auto cm = d.exact_cum_minus();
    const auto cp = d.exact_cum_plus();
    std::vector<Segment> segs;
    segs.reserve(atoms.size());
    // On [H-(v-), H-(v)) the quantile q_x sits at atom v; uses left limits.
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const auto& a = atoms[k];
      const Rational minus_left = cm[k] - a.mass_minus;
      const Rational plus_left = cp[k] - a.mass_plus;
      segs.push_back({minus_left, cm[k], a.value, plus_left - a.value * minus_left});
    }
    return ConcentrationFunction(PiecewiseCurve::exact(std::move(segs)));
  }
  const auto cm = d.cum_minus();
  const auto cp = d.cum_plus();
  std::vector<Point> pts;
  pts.reserve(cm.size() + 1);
  pts.push_back({0.0, 0.0});
  for (std::size_t k = 0; k < cm.size(); ++k) pts.push_back({cm[k], cp[k]});
  return ConcentrationFunction(PiecewiseCurve::sampled(std::move(pts)));
}

Rational duality_check(const LrDistribution& d, std::span<const Rational> grid) {
  const RocCurve roc = proper_roc(d);
  const ConcentrationFunction phi = concentration(d);
  Rational worst = 0;
  for (const auto& x : grid) {
    Rational gap = roc.exact_at(x) - (1 - phi.exact_at(1 - x));
    if (gap < 0) gap = -gap;
    worst = std::max(worst, gap);
  }
  return worst;
}

double duality_check(const LrDistribution& d, std::span<const double> grid) {
  const RocCurve roc = proper_roc(d);
  const ConcentrationFunction phi = concentration(d);
  double worst = 0.0;
  for (double x : grid) worst = std::max(worst, std::abs(roc(x) - (1.0 - phi(1.0 - x))));
  return worst;
}

LrDistribution length_biased_lr(const FiniteIncomeDistribution& income) {
  if (income.values.empty() || income.values.size() != income.probabilities.size())
    throw std::invalid_argument("income distribution: values and probabilities must match");
  Rational total = 0;
  Rational mean = 0;
  for (std::size_t i = 0; i < income.values.size(); ++i) {
    if (income.values[i] < 0) throw std::invalid_argument("income values must be nonnegative");
    if (income.probabilities[i] < 0) throw std::invalid_argument("probabilities must be nonnegative");
    total += income.probabilities[i];
    mean += income.values[i] * income.probabilities[i];
  }
  if (total != 1) throw std::invalid_argument("income probabilities must sum to 1");
  if (mean <= 0) throw std::invalid_argument("income distribution needs a positive mean");
  std::vector<AtomCell> cells;
  cells.reserve(income.values.size());
  for (std::size_t i = 0; i < income.values.size(); ++i)
    cells.push_back({income.probabilities[i], income.values[i] * income.probabilities[i] / mean});
  return LrDistribution::from_cells(cells);
}

ConcentrationFunction lorenz_from_distribution(const FiniteIncomeDistribution& income) {
  return concentration(length_biased_lr(income));
}

ConcentrationFunction lorenz_from_distribution(const std::function<double(double)>& quantile,
                                               std::size_t cells) {
  if (cells < 2) throw std::invalid_argument("Lorenz discretisation needs at least 2 cells");
  std::vector<double> values(cells);
  double mean = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(cells);
    const double y = quantile(u);
    if (!std::isfinite(y)) throw std::invalid_argument("income quantile is not finite (infinite mean?)");
    if (y < 0) throw std::invalid_argument("income values must be nonnegative");
    values[i] = y;
    mean += y / static_cast<double>(cells);
  }
  if (!(mean > 0)) throw std::invalid_argument("income distribution needs a positive mean");
  std::vector<double> lr(cells);
  std::vector<double> weight_minus(cells, 1.0);
  for (std::size_t i = 0; i < cells; ++i) lr[i] = values[i] / mean;
  return concentration(LrDistribution::from_weighted(lr, weight_minus, values));
}

}  // namespace lroc
