#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lroc/lr_distribution.hpp"
#include "lroc/roc_curve.hpp"

namespace lroc {

/// Concentration function of P+ with respect to P-:
///   phi(0) = 0, phi(1) = 1, phi(x) = P+(L < q_x) + q_x (x - H-(q_x-)).
/// Convex, nondecreasing, and below the diagonal.
class ConcentrationFunction {
 public:
  explicit ConcentrationFunction(PiecewiseCurve curve);

  const PiecewiseCurve& curve() const { return curve_; }
  double operator()(double x) const { return curve_(x); }
  Rational exact_at(const Rational& x) const { return curve_.exact_at(x); }

  // Exact: slopes nondecreasing. Otherwise violation <= tolerance.
  bool is_convex(double tolerance = 0.0) const;

 private:
  PiecewiseCurve curve_;
};

// Pointwise evaluation of the defining formula on an exact distribution.
Rational concentration_value(const LrDistribution& d, const Rational& x);

ConcentrationFunction concentration(const LrDistribution& d);

// max over the grid of |ROC(x) - (1 - phi(1 - x))|, ROC from proper_roc and
// phi from concentration(). Exact grid and result for exact distributions.
Rational duality_check(const LrDistribution& d, std::span<const Rational> grid);
double duality_check(const LrDistribution& d, std::span<const double> grid);

// Income distribution with finite support: values y_i >= 0 with probabilities p_i.
struct FiniteIncomeDistribution {
  std::vector<Rational> values;
  std::vector<Rational> probabilities;
};

// The length-biased pair: P- = F, P+(dy) = y F(dy) / m, so L = y / m.
LrDistribution length_biased_lr(const FiniteIncomeDistribution& income);

// Lorenz curve of a finite income distribution, via its length-biased pair.
// Throws std::invalid_argument on negative values or a nonpositive mean.
ConcentrationFunction lorenz_from_distribution(const FiniteIncomeDistribution& income);

// Continuous income distribution given by its quantile function. Discretised
// into `cells` equal-probability cells represented by their midpoint
// quantiles. Throws when a value is negative or non-finite (infinite mean).
ConcentrationFunction lorenz_from_distribution(const std::function<double(double)>& quantile,
                                               std::size_t cells = 10000);

}  // namespace lroc
