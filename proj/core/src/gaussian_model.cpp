#include "lroc/gaussian_model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "lroc/random.hpp"

namespace lroc {

namespace {

Eigen::MatrixXd symmetrised(const Eigen::MatrixXd& a, const char* which) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(which) + " covariance is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asymmetry = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (!(asymmetry <= 1e-3 * scale + 1e-12))
    throw std::invalid_argument(std::string(which) + " covariance is not symmetric");
  return (a + a.transpose()) / 2.0;
}

double log_det_from(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  const Eigen::MatrixXd l = llt.matrixL();
  return 2.0 * l.diagonal().array().log().sum();
}

}  // namespace

GaussianPair::GaussianPair(Eigen::VectorXd mean_minus, Eigen::MatrixXd cov_minus, Eigen::VectorXd mean_plus,
                           Eigen::MatrixXd cov_plus)
    : mean_minus_(std::move(mean_minus)), mean_plus_(std::move(mean_plus)) {
  const Eigen::Index p = mean_minus_.size();
  if (p == 0 || mean_plus_.size() != p || cov_minus.rows() != p || cov_plus.rows() != p)
    throw std::invalid_argument("Gaussian pair: inconsistent dimensions");
  if (!mean_minus_.allFinite() || !mean_plus_.allFinite() || !cov_minus.allFinite() || !cov_plus.allFinite())
    throw std::invalid_argument("Gaussian pair: non-finite parameter");
  cov_minus_ = symmetrised(cov_minus, "negative-class");
  cov_plus_ = symmetrised(cov_plus, "positive-class");
  llt_minus_.compute(cov_minus_);
  llt_plus_.compute(cov_plus_);
  if (llt_minus_.info() != Eigen::Success || llt_plus_.info() != Eigen::Success)
    throw std::invalid_argument("Gaussian pair: covariance is not positive definite");
  log_det_minus_ = log_det_from(llt_minus_);
  log_det_plus_ = log_det_from(llt_plus_);
  if (!std::isfinite(log_det_minus_) || !std::isfinite(log_det_plus_))
    throw std::invalid_argument("Gaussian pair: covariance is singular");
}

const Eigen::VectorXd& GaussianPair::mean(ClassLabel c) const {
  return c == ClassLabel::negative ? mean_minus_ : mean_plus_;
}
const Eigen::MatrixXd& GaussianPair::covariance(ClassLabel c) const {
  return c == ClassLabel::negative ? cov_minus_ : cov_plus_;
}
const Eigen::LLT<Eigen::MatrixXd>& GaussianPair::cholesky(ClassLabel c) const {
  return c == ClassLabel::negative ? llt_minus_ : llt_plus_;
}
double GaussianPair::log_det(ClassLabel c) const {
  return c == ClassLabel::negative ? log_det_minus_ : log_det_plus_;
}

double GaussianPair::mahalanobis(ClassLabel c, const Eigen::VectorXd& x) const {
  if (x.size() != dimension()) throw std::invalid_argument("point has wrong dimension");
  return cholesky(c).matrixL().solve(x - mean(c)).squaredNorm();
}

double qda_score(const GaussianPair& m, const Eigen::VectorXd& x) {
  return m.mahalanobis(ClassLabel::negative, x) - m.mahalanobis(ClassLabel::positive, x);
}

double log_likelihood_ratio(const GaussianPair& m, const Eigen::VectorXd& x) {
  return 0.5 * qda_score(m, x) + 0.5 * (m.log_det(ClassLabel::negative) - m.log_det(ClassLabel::positive));
}

Eigen::VectorXd su_liu_coefficients(const GaussianPair& m) {
  const Eigen::MatrixXd pooled = m.covariance(ClassLabel::negative) + m.covariance(ClassLabel::positive);
  return pooled.llt().solve(m.mean(ClassLabel::positive) - m.mean(ClassLabel::negative));
}

double su_liu_score(const GaussianPair& m, const Eigen::VectorXd& x) {
  if (x.size() != m.dimension()) throw std::invalid_argument("point has wrong dimension");
  return su_liu_coefficients(m).dot(x);
}

ScoreMoments su_liu_moments(const GaussianPair& m) {
  const Eigen::VectorXd w = su_liu_coefficients(m);
  return {w.dot(m.mean(ClassLabel::negative)), w.dot(m.covariance(ClassLabel::negative) * w),
          w.dot(m.mean(ClassLabel::positive)), w.dot(m.covariance(ClassLabel::positive) * w)};
}

namespace {

// Standard normal p x cols block for one seeded stream block.
Eigen::MatrixXd normal_block(Eigen::Index p, Eigen::Index cols, std::uint64_t seed, std::uint64_t block) {
  Engine rng = block_engine(seed, block);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(p, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < p; ++i) z(i, j) = normal(rng);
  return z;
}

std::uint64_t stream_of(ClassLabel c) { return c == ClassLabel::negative ? 0 : 1; }

}  // namespace

Eigen::MatrixXd sample_class(const GaussianPair& m, ClassLabel c, std::size_t n, std::uint64_t seed) {
  const Eigen::Index p = m.dimension();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n), p);
  const Eigen::MatrixXd l = m.cholesky(c).matrixL();
  for (std::size_t start = 0, block = 0; start < n; start += kBlockSize, ++block) {
    const auto cols = static_cast<Eigen::Index>(std::min(kBlockSize, n - start));
    Eigen::MatrixXd x = l * normal_block(p, cols, seed, 2 * block + stream_of(c));
    x.colwise() += m.mean(c);
    out.middleRows(static_cast<Eigen::Index>(start), cols) = x.transpose();
  }
  return out;
}

LrDistribution gaussian_lr_sample(const GaussianPair& m, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be positive");
  const Eigen::Index p = m.dimension();
  const double log_det_term = 0.5 * (m.log_det(ClassLabel::negative) - m.log_det(ClassLabel::positive));
  // Both distances come from the same x and the same kind of solve, so equal
  // classes give L == 1 exactly.
  auto maha = [&](ClassLabel c, const Eigen::MatrixXd& x) -> Eigen::VectorXd {
    Eigen::MatrixXd centred = x.colwise() - m.mean(c);
    m.cholesky(c).matrixL().solveInPlace(centred);
    return centred.colwise().squaredNorm().transpose();
  };
  auto draw = [&](ClassLabel c) {
    const Eigen::MatrixXd l = m.cholesky(c).matrixL();
    std::vector<double> lr;
    lr.reserve(n);
    for (std::size_t start = 0, block = 0; start < n; start += kBlockSize, ++block) {
      const auto cols = static_cast<Eigen::Index>(std::min(kBlockSize, n - start));
      Eigen::MatrixXd x = l * normal_block(p, cols, seed, 2 * block + stream_of(c));
      x.colwise() += m.mean(c);
      const Eigen::VectorXd maha_minus = maha(ClassLabel::negative, x);
      const Eigen::VectorXd maha_plus = maha(ClassLabel::positive, x);
      for (Eigen::Index j = 0; j < cols; ++j)
        lr.push_back(std::exp(0.5 * (maha_minus(j) - maha_plus(j)) + log_det_term));
    }
    return lr;
  };
  return LrDistribution::from_samples(draw(ClassLabel::negative), draw(ClassLabel::positive));
}

}  // namespace lroc
