#pragma once

// Hand-rolled random inputs for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "lroc/lr_distribution.hpp"
#include "oracles.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// 1..max_cells categories with small integer weights; some share LR values,
// some have zero positive mass (LR atom at 0).
inline std::vector<oracle::Cell> random_cells(Rng& rng, int max_cells = 8) {
  const int n = uniform_int(rng, 1, max_cells);
  std::vector<oracle::Cell> cells;
  for (int i = 0; i < n; ++i) {
    const int m = uniform_int(rng, 1, 12);
    int p = uniform_int(rng, 0, 12);
    if (i > 0 && uniform_int(rng, 0, 4) == 0) {
      // Copy an earlier cell's ratio with a different scale.
      const auto& prev = cells[static_cast<std::size_t>(uniform_int(rng, 0, i - 1))];
      const int k = uniform_int(rng, 1, 3);
      cells.push_back({prev.minus * k, prev.plus * k});
      continue;
    }
    if (uniform_int(rng, 0, 9) == 0) p = 0;
    cells.push_back({m, p});
  }
  bool any_plus = false;
  for (const auto& c : cells) any_plus = any_plus || c.plus > 0;
  if (!any_plus) cells.front().plus = 1;
  return oracle::normalised(cells);
}

inline lroc::LrDistribution to_distribution(const std::vector<oracle::Cell>& cells) {
  std::vector<lroc::AtomCell> ac;
  for (const auto& c : cells) ac.push_back({c.minus, c.plus});
  return lroc::LrDistribution::from_cells(ac);
}

// Strictly increasing rationals k/n inside (0,1).
inline std::vector<lroc::Rational> rational_grid(int n) {
  std::vector<lroc::Rational> g;
  for (int k = 1; k < n; ++k) g.emplace_back(k, n);
  return g;
}

}  // namespace gen
