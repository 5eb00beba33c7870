#include "lroc/lr_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace lroc {

namespace {

void require_probability_arg(const Rational& t) {
  if (!(t > 0 && t < 1))
    throw std::invalid_argument("quantile level must lie in (0,1), got " + format_rational(t));
}

void require_probability_arg(double t) {
  if (!(t > 0.0 && t < 1.0))
    throw std::invalid_argument("quantile level must lie in (0,1), got " + std::to_string(t));
}

}  // namespace

LrDistribution LrDistribution::exact(std::vector<ExactAtom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("LR distribution needs at least one atom");
  Rational total_minus = 0;
  Rational total_plus = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto& a = atoms[i];
    if (a.value < 0) throw std::invalid_argument("LR atom value must be nonnegative");
    if (i > 0 && !(atoms[i - 1].value < a.value))
      throw std::invalid_argument("LR atom values must be strictly increasing");
    if (a.mass_minus <= 0 || a.mass_minus > 1)
      throw std::invalid_argument("LR atom " + format_rational(a.value) +
                                  " needs P- mass in (0,1] (mutual absolute continuity)");
    if (a.mass_plus < 0 || a.mass_plus > 1)
      throw std::invalid_argument("LR atom P+ mass must lie in [0,1]");
    if (a.mass_plus != a.value * a.mass_minus)
      throw std::invalid_argument("LR atom " + format_rational(a.value) +
                                  ": P+ mass / P- mass must equal the atom value");
    if (a.cells.empty()) {
      a.cells.push_back({a.mass_minus, a.mass_plus});
    } else {
      Rational cm = 0;
      Rational cp = 0;
      for (const auto& c : a.cells) {
        if (c.mass_minus <= 0 || c.mass_plus != a.value * c.mass_minus)
          throw std::invalid_argument("atom cell inconsistent with atom value");
        cm += c.mass_minus;
        cp += c.mass_plus;
      }
      if (cm != a.mass_minus || cp != a.mass_plus)
        throw std::invalid_argument("atom cells do not add up to the atom masses");
    }
    total_minus += a.mass_minus;
    total_plus += a.mass_plus;
  }
  if (total_minus != 1) throw std::invalid_argument("P- masses sum to " + format_rational(total_minus));
  if (total_plus != 1) throw std::invalid_argument("P+ masses sum to " + format_rational(total_plus));

  LrDistribution d;
  d.exact_ = true;
  d.exact_atoms_ = std::move(atoms);
  Rational cm = 0;
  Rational cp = 0;
  for (const auto& a : d.exact_atoms_) {
    cm += a.mass_minus;
    cp += a.mass_plus;
    d.exact_cum_minus_.push_back(cm);
    d.exact_cum_plus_.push_back(cp);
  }
  d.build_double_view();
  return d;
}

LrDistribution LrDistribution::from_cells(std::span<const AtomCell> cells) {
  std::map<Rational, ExactAtom> by_value;
  for (const auto& c : cells) {
    if (c.mass_minus < 0 || c.mass_plus < 0) throw std::invalid_argument("negative mass");
    if (c.mass_minus == 0 && c.mass_plus == 0) continue;
    if (c.mass_minus == 0)
      throw std::invalid_argument(
          "category with P+ mass but no P- mass violates mutual absolute continuity");
    Rational value = c.mass_plus / c.mass_minus;
    auto& atom = by_value[value];
    atom.value = value;
    atom.mass_minus += c.mass_minus;
    atom.mass_plus += c.mass_plus;
    atom.cells.push_back(c);
  }
  std::vector<ExactAtom> atoms;
  atoms.reserve(by_value.size());
  for (auto& [v, a] : by_value) atoms.push_back(std::move(a));
  return exact(std::move(atoms));
}

LrDistribution LrDistribution::from_samples(std::vector<double> under_minus,
                                            std::vector<double> under_plus) {
  if (under_minus.empty() || under_plus.empty())
    throw std::invalid_argument("sampled LR distribution needs draws under both classes");
  for (const auto* v : {&under_minus, &under_plus})
    for (double x : *v)
      if (std::isnan(x) || x < 0) throw std::invalid_argument("LR draws must be nonnegative numbers");
  std::sort(under_minus.begin(), under_minus.end());
  std::sort(under_plus.begin(), under_plus.end());

  LrDistribution d;
  const double n_minus = static_cast<double>(under_minus.size());
  const double n_plus = static_cast<double>(under_plus.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < under_minus.size() || j < under_plus.size()) {
    double v;
    if (j == under_plus.size() || (i < under_minus.size() && under_minus[i] <= under_plus[j]))
      v = under_minus[i];
    else
      v = under_plus[j];
    std::size_t ci = 0;
    std::size_t cj = 0;
    while (i < under_minus.size() && under_minus[i] == v) ++i, ++ci;
    while (j < under_plus.size() && under_plus[j] == v) ++j, ++cj;
    d.atoms_.push_back({v, static_cast<double>(ci) / n_minus, static_cast<double>(cj) / n_plus});
    // Cumulative masses from counts so that they hit k/n without drift.
    d.cum_minus_.push_back(static_cast<double>(i) / n_minus);
    d.cum_plus_.push_back(static_cast<double>(j) / n_plus);
  }
  d.sample_size_ = std::min(under_minus.size(), under_plus.size());
  return d;
}

LrDistribution LrDistribution::from_weighted(std::span<const double> values,
                                             std::span<const double> weight_minus,
                                             std::span<const double> weight_plus) {
  if (values.empty() || values.size() != weight_minus.size() || values.size() != weight_plus.size())
    throw std::invalid_argument("weighted LR distribution: mismatched or empty inputs");
  double total_minus = 0.0;
  double total_plus = 0.0;
  std::vector<std::size_t> order(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::isnan(values[k]) || values[k] < 0 || !(weight_minus[k] >= 0) || !(weight_plus[k] >= 0))
      throw std::invalid_argument("weighted LR distribution: invalid value or weight");
    total_minus += weight_minus[k];
    total_plus += weight_plus[k];
    order[k] = k;
  }
  if (!(total_minus > 0) || !(total_plus > 0))
    throw std::invalid_argument("weighted LR distribution: zero total weight");
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

  LrDistribution d;
  double cm = 0.0;
  double cp = 0.0;
  for (std::size_t k : order) {
    const double wm = weight_minus[k] / total_minus;
    const double wp = weight_plus[k] / total_plus;
    if (!d.atoms_.empty() && d.atoms_.back().value == values[k]) {
      d.atoms_.back().mass_minus += wm;
      d.atoms_.back().mass_plus += wp;
    } else {
      d.atoms_.push_back({values[k], wm, wp});
      d.cum_minus_.push_back(0.0);
      d.cum_plus_.push_back(0.0);
    }
    cm += wm;
    cp += wp;
    d.cum_minus_.back() = cm;
    d.cum_plus_.back() = cp;
  }
  d.cum_minus_.back() = 1.0;
  d.cum_plus_.back() = 1.0;
  d.sample_size_ = values.size();
  return d;
}

void LrDistribution::build_double_view() {
  atoms_.clear();
  cum_minus_.clear();
  cum_plus_.clear();
  for (std::size_t i = 0; i < exact_atoms_.size(); ++i) {
    const auto& a = exact_atoms_[i];
    atoms_.push_back({to_double(a.value), to_double(a.mass_minus), to_double(a.mass_plus)});
    cum_minus_.push_back(to_double(exact_cum_minus_[i]));
    cum_plus_.push_back(to_double(exact_cum_plus_[i]));
  }
}

std::span<const ExactAtom> LrDistribution::exact_atoms() const {
  if (!exact_) throw std::logic_error("exact atoms requested from a sampled LR distribution");
  return exact_atoms_;
}

std::span<const Rational> LrDistribution::exact_cum_minus() const {
  if (!exact_) throw std::logic_error("exact masses requested from a sampled LR distribution");
  return exact_cum_minus_;
}

std::span<const Rational> LrDistribution::exact_cum_plus() const {
  if (!exact_) throw std::logic_error("exact masses requested from a sampled LR distribution");
  return exact_cum_plus_;
}

namespace {

// Sum of masses of atoms with value <= l (inclusive) or < l.
Rational exact_cdf(std::span<const ExactAtom> atoms, std::span<const Rational> cum,
                   const Rational& l, bool inclusive) {
  auto it = inclusive
                ? std::upper_bound(atoms.begin(), atoms.end(), l,
                                   [](const Rational& x, const ExactAtom& a) { return x < a.value; })
                : std::lower_bound(atoms.begin(), atoms.end(), l,
                                   [](const ExactAtom& a, const Rational& x) { return a.value < x; });
  const auto n = static_cast<std::size_t>(it - atoms.begin());
  return n == 0 ? Rational(0) : cum[n - 1];
}

double double_cdf(std::span<const SampledAtom> atoms, std::span<const double> cum, double l,
                  bool inclusive) {
  auto it = inclusive
                ? std::upper_bound(atoms.begin(), atoms.end(), l,
                                   [](double x, const SampledAtom& a) { return x < a.value; })
                : std::lower_bound(atoms.begin(), atoms.end(), l,
                                   [](const SampledAtom& a, double x) { return a.value < x; });
  const auto n = static_cast<std::size_t>(it - atoms.begin());
  return n == 0 ? 0.0 : cum[n - 1];
}

}  // namespace

Rational LrDistribution::cdf_minus(const Rational& l) const {
  return exact_cdf(exact_atoms(), exact_cum_minus_, l, true);
}
Rational LrDistribution::cdf_minus_left(const Rational& l) const {
  return exact_cdf(exact_atoms(), exact_cum_minus_, l, false);
}
Rational LrDistribution::cdf_plus(const Rational& l) const {
  return exact_cdf(exact_atoms(), exact_cum_plus_, l, true);
}
Rational LrDistribution::cdf_plus_left(const Rational& l) const {
  return exact_cdf(exact_atoms(), exact_cum_plus_, l, false);
}

double LrDistribution::cdf_minus(double l) const { return double_cdf(atoms_, cum_minus_, l, true); }
double LrDistribution::cdf_minus_left(double l) const { return double_cdf(atoms_, cum_minus_, l, false); }
double LrDistribution::cdf_plus(double l) const { return double_cdf(atoms_, cum_plus_, l, true); }
double LrDistribution::cdf_plus_left(double l) const { return double_cdf(atoms_, cum_plus_, l, false); }

std::size_t LrDistribution::quantile_index(const Rational& t) const {
  require_probability_arg(t);
  const auto cum = exact_cum_minus();
  auto it = std::lower_bound(cum.begin(), cum.end(), t);
  return static_cast<std::size_t>(it - cum.begin());
}

std::size_t LrDistribution::quantile_index(double t) const {
  require_probability_arg(t);
  auto it = std::lower_bound(cum_minus_.begin(), cum_minus_.end(), t);
  if (it == cum_minus_.end()) --it;  // rounding in weighted totals
  return static_cast<std::size_t>(it - cum_minus_.begin());
}

}  // namespace lroc
