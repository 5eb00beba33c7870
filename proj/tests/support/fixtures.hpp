#pragma once

#include <vector>

#include "lroc/finite_table.hpp"
#include "lroc/piecewise_model.hpp"
#include "oracles.hpp"

namespace fixtures {

using lroc::Rational;

// 109 subjects over five ordinal categories.
inline lroc::FiniteTablePair ordinal_table() {
  return lroc::FiniteTablePair({"--", "-", "+-", "+", "++"}, {33, 6, 6, 11, 2}, {3, 2, 2, 11, 33});
}

inline std::vector<oracle::Cell> ordinal_table_cells() {
  return oracle::normalised({{33, 3}, {6, 2}, {6, 2}, {11, 11}, {2, 33}});
}

// Uniform P- on (0,3] against a piecewise-constant P+ that is not monotone in x.
inline lroc::PiecewiseConstantPair three_rectangles() {
  return lroc::PiecewiseConstantPair({0, 1, 2, 3}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                                     {Rational(1, 18), Rational(10, 18), Rational(7, 18)});
}

inline std::vector<oracle::Cell> three_rectangles_cells() {
  return {{Rational(1, 3), Rational(1, 18)}, {Rational(1, 3), Rational(10, 18)}, {Rational(1, 3), Rational(7, 18)}};
}

inline lroc::LrDistribution unit_lr() {
  return lroc::LrDistribution::exact({{1, 1, 1, {}}});
}

}  // namespace fixtures
