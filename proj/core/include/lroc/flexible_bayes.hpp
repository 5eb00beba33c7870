#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lroc/kde.hpp"
#include "lroc/roc_curve.hpp"

namespace lroc {

// log L(x) = sum_k log f+_k(x_k) - log f-_k(x_k), and its exponential.
double flexible_bayes_log_lr(const KernelDensityEstimate& kde, const Eigen::VectorXd& x);
double flexible_bayes_lr(const KernelDensityEstimate& kde, const Eigen::VectorXd& x);

// In-sample estimated LR of every row.
std::vector<double> flexible_bayes_scores(const KernelDensityEstimate& kde, const Eigen::MatrixXd& rows);

/// Monte Carlo settings. `thresholds` are LR values (strictly increasing,
/// positive); when empty, `size` thresholds are spaced logarithmically between
/// the 0.1% and 99.9% quantiles of the pooled simulated LR values.
struct RocGrid {
  std::vector<double> thresholds;
  std::size_t size = 512;
  std::size_t replications = 100000;
  std::uint64_t seed = 1;
};

// Draws from the product of per-feature kernel mixtures of one class; one row per draw.
Eigen::MatrixXd sample_kde(const KernelDensityEstimate& kde, ClassLabel c, std::size_t n, std::uint64_t seed);

/// Estimated ROC of the flexible Bayes rule "positive iff L(x) > t".
///
/// B draws per class are taken once and thresholded at every grid value, so
/// the estimated FPR and TPR are exactly nonincreasing in t. Points are
/// ordered by FPR and joined to (0,0) and (1,1). No randomisation is applied:
/// the estimated LR has no atoms almost surely. Depends only on (kde, grid).
RocCurve algorithm1_roc(const KernelDensityEstimate& kde, const RocGrid& grid);

// Logarithmically spaced thresholds between the 0.1% and 99.9% pooled quantiles.
std::vector<double> default_thresholds(std::span<const double> log_lr_minus, std::span<const double> log_lr_plus,
                                       std::size_t size);

}  // namespace lroc
