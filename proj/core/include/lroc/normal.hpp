#pragma once

namespace lroc {

// Standard normal density, distribution function and quantile.
double normal_pdf(double z);
double normal_cdf(double z);
double normal_quantile(double p);

}  // namespace lroc
