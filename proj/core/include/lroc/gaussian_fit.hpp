#pragma once

#include "lroc/gaussian_model.hpp"
#include "lroc/kde.hpp"

namespace lroc {

// Maximum likelihood means and covariances (divisor n) per class. Throws
// DataError when a class covariance is singular.
GaussianPair fit_gaussian_pair(const LabeledSample& sample);

}  // namespace lroc
