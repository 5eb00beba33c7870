#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lroc/lr_distribution.hpp"
#include "lroc/rational.hpp"
#include "lroc/roc_curve.hpp"

namespace lroc {

/// Two densities on an interval that are constant on shared pieces
/// (breakpoints[i], breakpoints[i+1]]. The negative-class density must be
/// strictly positive on every piece; both must integrate to one.
class PiecewiseConstantPair {
 public:
  PiecewiseConstantPair(std::vector<Rational> breakpoints, std::vector<Rational> density_minus,
                        std::vector<Rational> density_plus);

  std::size_t piece_count() const { return density_minus_.size(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& density_minus() const { return density_minus_; }
  const std::vector<Rational>& density_plus() const { return density_plus_; }

  Rational length(std::size_t piece) const { return breakpoints_[piece + 1] - breakpoints_[piece]; }
  Rational mass_minus(std::size_t piece) const { return density_minus_[piece] * length(piece); }
  Rational mass_plus(std::size_t piece) const { return density_plus_[piece] * length(piece); }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> density_minus_;
  std::vector<Rational> density_plus_;
};

// Atoms at f+/f- per piece, masses aggregated over pieces sharing a value.
LrDistribution lr_distribution_piecewise(const PiecewiseConstantPair& m);

// ROC of "positive iff S > c" on the raw variable: slopes follow the pieces
// from right to left, so it is concave only when the LR is monotone in S.
RocCurve score_roc_piecewise(const PiecewiseConstantPair& m);

// n draws of L under each class, seeded.
LrDistribution sample_lr_piecewise(const PiecewiseConstantPair& m, std::size_t n, std::uint64_t seed);

}  // namespace lroc
