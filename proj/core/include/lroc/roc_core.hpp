#pragma once

#include <vector>

#include "lroc/lr_distribution.hpp"
#include "lroc/roc_curve.hpp"

namespace lroc {

enum class Decision { negative, positive };

// Whether ties L == q_t are broken by the auxiliary randomisation. Turning it
// off leaves the rule "positive iff L > q_t", whose FPR is a step function.
enum class Randomization { on, off };

/// Threshold-level view of the randomised LR rule at level t: declare
/// positive when L > quantile, negative when L < quantile, and positive with
/// probability `randomization` when L == quantile.
template <class T>
struct BasicRandomizedDecision {
  T threshold;
  T quantile;
  T randomization;
};

using RandomizedDecision = BasicRandomizedDecision<Rational>;
using SampledRandomizedDecision = BasicRandomizedDecision<double>;

// H-(l), right-continuous.
Rational cdf_minus(const LrDistribution& d, const Rational& l);
double cdf_minus(const LrDistribution& d, double l);

// q_t = inf{y : H-(y) >= t}; throws std::invalid_argument unless 0 < t < 1.
Rational quantile_minus(const LrDistribution& d, const Rational& t);
double quantile_minus(const LrDistribution& d, double t);

RandomizedDecision randomized_decision(const LrDistribution& d, const Rational& t);
SampledRandomizedDecision randomized_decision(const LrDistribution& d, double t);

// Positive iff l > q_t, or l == q_t and u < r_t. Deterministic in (t, l, u).
Decision decision_rule(const LrDistribution& d, const Rational& t, const Rational& l_observed, double u);
Decision decision_rule(const LrDistribution& d, double t, double l_observed, double u);

// P-(declare positive) = 1 - t exactly for exact distributions when the rule
// is randomised; the Monte Carlo estimate for sampled ones.
Rational false_positive_rate(const LrDistribution& d, const Rational& t,
                             Randomization mode = Randomization::on);
double false_positive_rate(const LrDistribution& d, double t,
                           Randomization mode = Randomization::on);

Rational true_positive_rate(const LrDistribution& d, const Rational& t,
                            Randomization mode = Randomization::on);
double true_positive_rate(const LrDistribution& d, double t,
                          Randomization mode = Randomization::on);

/// ROC(x) = 1 - H+(q_{1-x}) + q_{1-x} (H-(q_{1-x}) - (1-x)) evaluated
/// pointwise on an exact distribution, with ROC(0) = 0 and ROC(1) = 1.
Rational proper_roc_value(const LrDistribution& d, const Rational& x);

/// The ROC curve of the randomised LR rule.
///
/// Exact distributions yield one segment per atom, ordered by decreasing LR
/// value, each with slope equal to the atom value. Sampled distributions
/// yield the polyline through (P-(L >= v), P+(L >= v)) over the pseudo-atoms
/// v in decreasing order; the straight pieces are exactly what randomising at
/// a pseudo-atom produces.
RocCurve proper_roc(const LrDistribution& d);

/// Non-randomised operating points, (0,0) and (1,1) included. One point per
/// atom cell: atoms merged from several categories contribute the points
/// reached by adding those categories one at a time (collinear on the
/// atom's segment). Requires an exact distribution.
std::vector<std::pair<Rational, Rational>> roc_points(const LrDistribution& d);

}  // namespace lroc
