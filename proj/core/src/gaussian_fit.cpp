#include "lroc/gaussian_fit.hpp"

#include <stdexcept>

#include "lroc/error.hpp"

namespace lroc {

GaussianPair fit_gaussian_pair(const LabeledSample& sample) {
  auto moments = [&](ClassLabel c) {
    const Eigen::MatrixXd x = sample.rows(c);
    const Eigen::VectorXd mean = x.colwise().mean().transpose();
    const Eigen::MatrixXd centred = x.rowwise() - mean.transpose();
    return std::pair{mean, Eigen::MatrixXd(centred.transpose() * centred / static_cast<double>(x.rows()))};
  };
  auto [mean_minus, cov_minus] = moments(ClassLabel::negative);
  auto [mean_plus, cov_plus] = moments(ClassLabel::positive);
  try {
    return GaussianPair(mean_minus, cov_minus, mean_plus, cov_plus);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("cannot fit Gaussian model: ") + e.what());
  }
}

}  // namespace lroc
