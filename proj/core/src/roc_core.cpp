#include "lroc/roc_core.hpp"

#include <stdexcept>

namespace lroc {

Rational cdf_minus(const LrDistribution& d, const Rational& l) { return d.cdf_minus(l); }
double cdf_minus(const LrDistribution& d, double l) { return d.cdf_minus(l); }

Rational quantile_minus(const LrDistribution& d, const Rational& t) {
  return d.exact_atoms()[d.quantile_index(t)].value;
}

double quantile_minus(const LrDistribution& d, double t) { return d.atoms()[d.quantile_index(t)].value; }

RandomizedDecision randomized_decision(const LrDistribution& d, const Rational& t) {
  const std::size_t i = d.quantile_index(t);
  const auto& atom = d.exact_atoms()[i];
  const Rational& at = d.exact_cum_minus()[i];
  const Rational before = at - atom.mass_minus;
  return {t, atom.value, (at - t) / (at - before)};
}

SampledRandomizedDecision randomized_decision(const LrDistribution& d, double t) {
  const std::size_t i = d.quantile_index(t);
  const double at = d.cum_minus()[i];
  const double before = i == 0 ? 0.0 : d.cum_minus()[i - 1];
  return {t, d.atoms()[i].value, (at - t) / (at - before)};
}

Decision decision_rule(const LrDistribution& d, const Rational& t, const Rational& l_observed, double u) {
  const auto rule = randomized_decision(d, t);
  if (l_observed > rule.quantile) return Decision::positive;
  if (l_observed < rule.quantile) return Decision::negative;
  return Rational(u) < rule.randomization ? Decision::positive : Decision::negative;
}

Decision decision_rule(const LrDistribution& d, double t, double l_observed, double u) {
  const auto rule = randomized_decision(d, t);
  if (l_observed > rule.quantile) return Decision::positive;
  if (l_observed < rule.quantile) return Decision::negative;
  return u < rule.randomization ? Decision::positive : Decision::negative;
}

namespace {

// P(L > q_t) + P(L = q_t) r_t under the class whose cumulative masses are `cum`.
template <class T, class Masses>
T positive_rate(const Masses& cum, std::size_t i, const T& atom_mass, const T& r) {
  return T(1) - cum[i] + atom_mass * r;
}

}  // namespace

Rational false_positive_rate(const LrDistribution& d, const Rational& t, Randomization mode) {
  const auto rule = randomized_decision(d, t);
  const std::size_t i = d.quantile_index(t);
  const Rational r = mode == Randomization::on ? rule.randomization : Rational(0);
  return positive_rate<Rational>(d.exact_cum_minus(), i, d.exact_atoms()[i].mass_minus, r);
}

double false_positive_rate(const LrDistribution& d, double t, Randomization mode) {
  const auto rule = randomized_decision(d, t);
  const std::size_t i = d.quantile_index(t);
  const double r = mode == Randomization::on ? rule.randomization : 0.0;
  return positive_rate<double>(d.cum_minus(), i, d.atoms()[i].mass_minus, r);
}

Rational true_positive_rate(const LrDistribution& d, const Rational& t, Randomization mode) {
  const auto rule = randomized_decision(d, t);
  const std::size_t i = d.quantile_index(t);
  const Rational r = mode == Randomization::on ? rule.randomization : Rational(0);
  return positive_rate<Rational>(d.exact_cum_plus(), i, d.exact_atoms()[i].mass_plus, r);
}

double true_positive_rate(const LrDistribution& d, double t, Randomization mode) {
  const auto rule = randomized_decision(d, t);
  const std::size_t i = d.quantile_index(t);
  const double r = mode == Randomization::on ? rule.randomization : 0.0;
  return positive_rate<double>(d.cum_plus(), i, d.atoms()[i].mass_plus, r);
}

Rational proper_roc_value(const LrDistribution& d, const Rational& x) {
  if (x < 0 || x > 1) throw std::invalid_argument("ROC argument outside [0,1]");
  if (x == 0) return 0;
  if (x == 1) return 1;
  const Rational level = 1 - x;
  const Rational q = quantile_minus(d, level);
  return 1 - d.cdf_plus(q) + q * (d.cdf_minus(q) - level);
}

RocCurve proper_roc(const LrDistribution& d) {
  if (d.is_exact()) {
    const auto atoms = d.exact_atoms();
    const auto cm = d.exact_cum_minus();
    const auto cp = d.exact_cum_plus();
    std::vector<Segment> segs;
    segs.reserve(atoms.size());
    // On [1 - H-(v), 1 - H-(v-)) the quantile q_{1-x} sits at atom v.
    for (std::size_t k = atoms.size(); k-- > 0;) {
      const auto& a = atoms[k];
      segs.push_back({1 - cm[k], 1 - (cm[k] - a.mass_minus), a.value, 1 - cp[k] + a.value * (cm[k] - 1)});
    }
    return RocCurve(PiecewiseCurve::exact(std::move(segs)));
  }

  const auto atoms = d.atoms();
  const auto cm = d.cum_minus();
  const auto cp = d.cum_plus();
  std::vector<Point> pts;
  pts.reserve(atoms.size() + 1);
  pts.push_back({0.0, 0.0});
  for (std::size_t k = atoms.size(); k-- > 0;) {
    // (P-(L >= v_k), P+(L >= v_k)) from cumulative masses to avoid drift.
    const double below_minus = k == 0 ? 0.0 : cm[k - 1];
    const double below_plus = k == 0 ? 0.0 : cp[k - 1];
    pts.push_back({1.0 - below_minus, 1.0 - below_plus});
  }
  return RocCurve(PiecewiseCurve::sampled(std::move(pts)));
}

std::vector<std::pair<Rational, Rational>> roc_points(const LrDistribution& d) {
  if (!d.is_exact()) throw std::invalid_argument("roc_points requires an exact LR distribution");
  const auto atoms = d.exact_atoms();
  std::vector<std::pair<Rational, Rational>> pts{{0, 0}};
  Rational x = 0;
  Rational y = 0;
  for (std::size_t k = atoms.size(); k-- > 0;) {
    for (const auto& cell : atoms[k].cells) {
      x += cell.mass_minus;
      y += cell.mass_plus;
      pts.emplace_back(x, y);
    }
  }
  return pts;
}

}  // namespace lroc
