#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lroc/rational.hpp"

namespace lroc {

// Joint mass of one category (or density piece) under P- and P+.
struct AtomCell {
  Rational mass_minus;
  Rational mass_plus;
};

/// Atom of the likelihood ratio L = dP+/dP-: the value taken by L together
/// with the probability of {L = value} under each class. Because the value is
/// the LR itself, mass_plus == value * mass_minus always holds.
///
/// `cells` keeps the categories that were merged into the atom, in the order
/// they were supplied. They do not change any distribution function; they only
/// let roc_points() report the operating points of rules that split a tied
/// LR value by category.
struct ExactAtom {
  Rational value;
  Rational mass_minus;
  Rational mass_plus;
  std::vector<AtomCell> cells;
};

// Floating-point atom. For sampled distributions these are pseudo-atoms
// (merged duplicate draws) and mass_plus / mass_minus need not equal value.
struct SampledAtom {
  double value;
  double mass_minus;
  double mass_plus;
};

/// Distribution of the likelihood ratio under both classes.
///
/// Exact distributions are finite sets of rational atoms whose masses sum to
/// exactly one under each class. Sampled distributions are weighted empirical
/// distributions of L-draws; duplicate draws are merged into pseudo-atoms.
/// Values are immutable after construction.
class LrDistribution {
 public:
  // Throws std::invalid_argument unless: values strictly increasing and >= 0,
  // mass_minus > 0, mass_plus == value * mass_minus, masses sum to one.
  static LrDistribution exact(std::vector<ExactAtom> atoms);

  // Builds atoms from per-category masses: L = mass_plus / mass_minus, equal
  // LR values merged. Cells with both masses zero are dropped; a cell with
  // mass under only one class violates mutual absolute continuity and throws.
  // Zero-valued LR atoms (mass_plus == 0) are allowed.
  static LrDistribution from_cells(std::span<const AtomCell> cells);

  // Equal-weight Monte Carlo draws of L under P- and under P+.
  static LrDistribution from_samples(std::vector<double> under_minus,
                                     std::vector<double> under_plus);

  // Weighted draws on a common support; weights are normalised per class.
  static LrDistribution from_weighted(std::span<const double> values,
                                      std::span<const double> weight_minus,
                                      std::span<const double> weight_plus);

  bool is_exact() const { return exact_; }

  // Exact atoms, ascending. Throws std::logic_error on sampled distributions.
  std::span<const ExactAtom> exact_atoms() const;
  std::span<const Rational> exact_cum_minus() const;
  std::span<const Rational> exact_cum_plus() const;

  // Floating view of the atoms (ascending) with cumulative masses; available
  // for both kinds.
  std::span<const SampledAtom> atoms() const { return atoms_; }
  std::span<const double> cum_minus() const { return cum_minus_; }
  std::span<const double> cum_plus() const { return cum_plus_; }

  // Number of draws behind a sampled distribution (min over classes); zero
  // for exact distributions.
  std::size_t sample_size() const { return sample_size_; }

  // H-(l) = P-(L <= l) and the left limit H-(l-) = P-(L < l); same for P+.
  Rational cdf_minus(const Rational& l) const;
  Rational cdf_minus_left(const Rational& l) const;
  Rational cdf_plus(const Rational& l) const;
  Rational cdf_plus_left(const Rational& l) const;

  double cdf_minus(double l) const;
  double cdf_minus_left(double l) const;
  double cdf_plus(double l) const;
  double cdf_plus_left(double l) const;

  // Index of the atom holding q_t = inf{y : H-(y) >= t}. Requires 0 < t < 1.
  std::size_t quantile_index(const Rational& t) const;
  std::size_t quantile_index(double t) const;

 private:
  LrDistribution() = default;
  void build_double_view();

  bool exact_ = false;
  std::vector<ExactAtom> exact_atoms_;
  std::vector<Rational> exact_cum_minus_;
  std::vector<Rational> exact_cum_plus_;
  std::vector<SampledAtom> atoms_;
  std::vector<double> cum_minus_;
  std::vector<double> cum_plus_;
  std::size_t sample_size_ = 0;
};

}  // namespace lroc
