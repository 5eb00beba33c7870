#include "lroc/flexible_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lroc/random.hpp"

namespace lroc {

double flexible_bayes_log_lr(const KernelDensityEstimate& kde, const Eigen::VectorXd& x) {
  if (static_cast<std::size_t>(x.size()) != kde.dimension())
    throw std::invalid_argument("point has wrong dimension");
  double total = 0.0;
  for (std::size_t k = 0; k < kde.dimension(); ++k) {
    const double v = x(static_cast<Eigen::Index>(k));
    total += kde_log_eval(kde, ClassLabel::positive, k, v) - kde_log_eval(kde, ClassLabel::negative, k, v);
  }
  return total;
}

double flexible_bayes_lr(const KernelDensityEstimate& kde, const Eigen::VectorXd& x) {
  return std::exp(flexible_bayes_log_lr(kde, x));
}

std::vector<double> flexible_bayes_scores(const KernelDensityEstimate& kde, const Eigen::MatrixXd& rows) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.push_back(flexible_bayes_lr(kde, rows.row(i).transpose()));
  return out;
}

Eigen::MatrixXd sample_kde(const KernelDensityEstimate& kde, ClassLabel c, std::size_t n, std::uint64_t seed) {
  const std::size_t p = kde.dimension();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  const std::uint64_t stream = c == ClassLabel::negative ? 0 : 1;
  for (std::size_t start = 0, block = 0; start < n; start += kBlockSize, ++block) {
    Engine rng = block_engine(seed, 2 * block + stream);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::size_t end = std::min(n, start + kBlockSize);
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t k = 0; k < p; ++k) {
        const auto& centers = kde.centers(c, k);
        std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
        const double centre = centers[pick(rng)];
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = centre + kde.bandwidth(c, k) * normal(rng);
      }
  }
  return out;
}

std::vector<double> default_thresholds(std::span<const double> log_lr_minus, std::span<const double> log_lr_plus,
                                       std::size_t size) {
  if (size < 2) throw std::invalid_argument("threshold grid needs at least 2 values");
  std::vector<double> pooled(log_lr_minus.begin(), log_lr_minus.end());
  pooled.insert(pooled.end(), log_lr_plus.begin(), log_lr_plus.end());
  std::sort(pooled.begin(), pooled.end());
  auto at = [&](double p) {
    const auto i = static_cast<std::size_t>(std::floor(p * static_cast<double>(pooled.size() - 1)));
    return pooled[i];
  };
  double lo = at(0.001);
  double hi = at(0.999);
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  std::vector<double> out(size);
  for (std::size_t i = 0; i < size; ++i)
    out[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(size - 1));
  return out;
}

RocCurve algorithm1_roc(const KernelDensityEstimate& kde, const RocGrid& grid) {
  if (grid.replications < 1) throw std::invalid_argument("need at least one replication");
  for (std::size_t i = 0; i < grid.thresholds.size(); ++i) {
    if (!(grid.thresholds[i] > 0) || !std::isfinite(grid.thresholds[i]))
      throw std::invalid_argument("thresholds must be finite and positive");
    if (i > 0 && !(grid.thresholds[i] > grid.thresholds[i - 1]))
      throw std::invalid_argument("thresholds must be strictly increasing");
  }

  auto log_lrs = [&](ClassLabel c) {
    const Eigen::MatrixXd x = sample_kde(kde, c, grid.replications, grid.seed);
    std::vector<double> out;
    out.reserve(grid.replications);
    for (Eigen::Index i = 0; i < x.rows(); ++i) out.push_back(flexible_bayes_log_lr(kde, x.row(i).transpose()));
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::vector<double> minus = log_lrs(ClassLabel::negative);
  const std::vector<double> plus = log_lrs(ClassLabel::positive);
  const std::vector<double> thresholds =
      grid.thresholds.empty() ? default_thresholds(minus, plus, grid.size) : grid.thresholds;

  const double b = static_cast<double>(grid.replications);
  auto above = [](const std::vector<double>& sorted, double log_t) {
    return static_cast<double>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), log_t));
  };
  std::vector<Point> pts;
  pts.reserve(thresholds.size() + 2);
  pts.push_back({0.0, 0.0});
  for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
    const double log_t = std::log(*it);
    pts.push_back({above(minus, log_t) / b, above(plus, log_t) / b});
  }
  pts.push_back({1.0, 1.0});
  return RocCurve(PiecewiseCurve::sampled(std::move(pts)));
}

}  // namespace lroc
