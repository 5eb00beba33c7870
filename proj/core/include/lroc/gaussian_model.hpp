#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "lroc/class_label.hpp"
#include "lroc/lr_distribution.hpp"

namespace lroc {

/// Multivariate normal P- = N(mean_minus, cov_minus), P+ = N(mean_plus, cov_plus).
/// Cholesky factors are computed once here; non-PD covariances are rejected.
/// Covariances that are symmetric up to rounding of printed values
/// (|a_ij - a_ji| <= 1e-3 * max(1, max|a|)) are symmetrised by averaging.
class GaussianPair {
 public:
  GaussianPair(Eigen::VectorXd mean_minus, Eigen::MatrixXd cov_minus, Eigen::VectorXd mean_plus,
               Eigen::MatrixXd cov_plus);

  Eigen::Index dimension() const { return mean_minus_.size(); }
  const Eigen::VectorXd& mean(ClassLabel c) const;
  const Eigen::MatrixXd& covariance(ClassLabel c) const;
  const Eigen::LLT<Eigen::MatrixXd>& cholesky(ClassLabel c) const;
  double log_det(ClassLabel c) const;

  // (x - mu)^T Sigma^{-1} (x - mu) via a triangular solve.
  double mahalanobis(ClassLabel c, const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd mean_minus_, mean_plus_;
  Eigen::MatrixXd cov_minus_, cov_plus_;
  Eigen::LLT<Eigen::MatrixXd> llt_minus_, llt_plus_;
  double log_det_minus_ = 0.0;
  double log_det_plus_ = 0.0;
};

/// Quadratic discriminant score
///   (x - mu-)^T Sigma-^{-1} (x - mu-) - (x - mu+)^T Sigma+^{-1} (x - mu+),
/// which equals 2 log L(x) - (log det Sigma- - log det Sigma+).
double qda_score(const GaussianPair& m, const Eigen::VectorXd& x);
double log_likelihood_ratio(const GaussianPair& m, const Eigen::VectorXd& x);

// (Sigma- + Sigma+)^{-1} (mu+ - mu-), the best linear combination.
Eigen::VectorXd su_liu_coefficients(const GaussianPair& m);
double su_liu_score(const GaussianPair& m, const Eigen::VectorXd& x);

// Mean and variance of the linear score under each class.
struct ScoreMoments {
  double mean_minus;
  double variance_minus;
  double mean_plus;
  double variance_plus;
};
ScoreMoments su_liu_moments(const GaussianPair& m);

// n draws (rows) from one class, block-seeded.
Eigen::MatrixXd sample_class(const GaussianPair& m, ClassLabel c, std::size_t n, std::uint64_t seed);

// n LR draws under each class from the log-density difference; deterministic in seed.
LrDistribution gaussian_lr_sample(const GaussianPair& m, std::size_t n, std::uint64_t seed);

}  // namespace lroc
