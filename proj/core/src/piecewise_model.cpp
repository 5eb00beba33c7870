#include "lroc/piecewise_model.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lroc/random.hpp"

namespace lroc {

PiecewiseConstantPair::PiecewiseConstantPair(std::vector<Rational> breakpoints,
                                             std::vector<Rational> density_minus,
                                             std::vector<Rational> density_plus)
    : breakpoints_(std::move(breakpoints)),
      density_minus_(std::move(density_minus)),
      density_plus_(std::move(density_plus)) {
  const std::size_t pieces = density_minus_.size();
  if (pieces == 0 || density_plus_.size() != pieces || breakpoints_.size() != pieces + 1)
    throw std::invalid_argument("piecewise pair: need n+1 breakpoints and n densities per class");
  Rational total_minus = 0;
  Rational total_plus = 0;
  for (std::size_t i = 0; i < pieces; ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("piecewise pair: breakpoints must be strictly increasing");
    if (density_minus_[i] <= 0)
      throw std::invalid_argument("piecewise pair: negative-class density must be positive on piece " +
                                  std::to_string(i + 1));
    if (density_plus_[i] < 0) throw std::invalid_argument("piecewise pair: negative density");
    total_minus += mass_minus(i);
    total_plus += mass_plus(i);
  }
  if (total_minus != 1 || total_plus != 1)
    throw std::invalid_argument("piecewise pair: each density must integrate to 1");
}

LrDistribution lr_distribution_piecewise(const PiecewiseConstantPair& m) {
  std::vector<AtomCell> cells;
  cells.reserve(m.piece_count());
  for (std::size_t i = 0; i < m.piece_count(); ++i) cells.push_back({m.mass_minus(i), m.mass_plus(i)});
  return LrDistribution::from_cells(cells);
}

RocCurve score_roc_piecewise(const PiecewiseConstantPair& m) {
  std::vector<Segment> segs;
  Rational x = 0;
  Rational y = 0;
  for (std::size_t k = m.piece_count(); k-- > 0;) {
    const Rational slope = m.density_plus()[k] / m.density_minus()[k];
    const Rational x_hi = x + m.mass_minus(k);
    segs.push_back({x, x_hi, slope, y - slope * x});
    x = x_hi;
    y += m.mass_plus(k);
  }
  return RocCurve(PiecewiseCurve::exact(std::move(segs)));
}

LrDistribution sample_lr_piecewise(const PiecewiseConstantPair& m, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be positive");
  std::vector<double> lr(m.piece_count());
  std::vector<double> cum_minus(m.piece_count());
  std::vector<double> cum_plus(m.piece_count());
  Rational cm = 0;
  Rational cp = 0;
  for (std::size_t i = 0; i < m.piece_count(); ++i) {
    lr[i] = to_double(m.density_plus()[i] / m.density_minus()[i]);
    cm += m.mass_minus(i);
    cp += m.mass_plus(i);
    cum_minus[i] = to_double(cm);
    cum_plus[i] = to_double(cp);
  }
  auto draw = [&](const std::vector<double>& cum, std::uint64_t stream) {
    std::vector<double> out;
    out.reserve(n);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t start = 0, block = 0; start < n; start += kBlockSize, ++block) {
      Engine rng = block_engine(seed, 2 * block + stream);
      const std::size_t stop = std::min(n, start + kBlockSize);
      for (std::size_t i = start; i < stop; ++i) {
        const double u = unif(rng);
        auto it = std::upper_bound(cum.begin(), cum.end(), u);
        if (it == cum.end()) --it;
        out.push_back(lr[static_cast<std::size_t>(it - cum.begin())]);
      }
    }
    return out;
  };
  return LrDistribution::from_samples(draw(cum_minus, 0), draw(cum_plus, 1));
}

}  // namespace lroc
