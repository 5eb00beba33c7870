#pragma once

#include <span>

#include "lroc/gaussian_model.hpp"
#include "lroc/roc_curve.hpp"

namespace lroc {

// ROC(x) = Phi(a + b * Phi^{-1}(x)) for a score that is N(m-, s-^2) under the
// negative class and N(m+, s+^2) under the positive class.
struct BinormalParameters {
  double a;
  double b;
};

BinormalParameters binormal_parameters(double mean_minus, double sd_minus, double mean_plus, double sd_plus);
BinormalParameters su_liu_binormal(const GaussianPair& m);

double binormal_value(BinormalParameters p, double x);

// Polyline through the grid (endpoints added). Improper whenever b != 1.
// Throws std::invalid_argument when b <= 0.
RocCurve binormal_roc(double a, double b, std::span<const double> grid);

}  // namespace lroc
