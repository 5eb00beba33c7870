#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lroc/class_label.hpp"

namespace lroc {

/// n x p feature matrix with one class label per row. Throws DataError
/// unless every value is finite, p >= 1, and each class has at least two rows.
class LabeledSample {
 public:
  LabeledSample(Eigen::MatrixXd features, std::vector<ClassLabel> labels,
                std::vector<std::string> feature_names = {});

  const Eigen::MatrixXd& features() const { return features_; }
  const std::vector<ClassLabel>& labels() const { return labels_; }
  const std::vector<std::string>& feature_names() const { return names_; }
  Eigen::Index dimension() const { return features_.cols(); }
  std::size_t count(ClassLabel c) const;

  // Rows of one class, in input order.
  Eigen::MatrixXd rows(ClassLabel c) const;

 private:
  Eigen::MatrixXd features_;
  std::vector<ClassLabel> labels_;
  std::vector<std::string> names_;
};

struct SilvermanRule {};  // 0.9 min(sd, IQR/1.34) n^(-1/5)
struct ScottRule {};      // 1.06 min(sd, IQR/1.34) n^(-1/5)
// Either p values (shared by both classes) or 2p values (negative class first).
struct FixedBandwidth {
  std::vector<double> values;
};
using BandwidthRule = std::variant<SilvermanRule, ScottRule, FixedBandwidth>;

// "silverman", "scott" or "fixed:v1,v2,..."; throws UsageError otherwise.
BandwidthRule parse_bandwidth_rule(const std::string& text);

// Rule-of-thumb bandwidth for one sample; IQR from type-7 quantiles. When the
// IQR is zero the standard deviation alone is used. Returns 0 for a constant sample.
double rule_of_thumb_bandwidth(std::vector<double> values, double factor);

/// Product of per-feature, per-class Gaussian kernel densities.
class KernelDensityEstimate {
 public:
  KernelDensityEstimate(std::array<std::vector<std::vector<double>>, 2> centers,
                        std::array<std::vector<double>, 2> bandwidths);

  std::size_t dimension() const { return bandwidths_[0].size(); }
  const std::vector<double>& centers(ClassLabel c, std::size_t feature) const;
  double bandwidth(ClassLabel c, std::size_t feature) const;

 private:
  std::array<std::vector<std::vector<double>>, 2> centers_;
  std::array<std::vector<double>, 2> bandwidths_;
};

// Throws DataError naming the feature when a class has zero spread in it.
KernelDensityEstimate fit_kde(const LabeledSample& sample, const BandwidthRule& rule = SilvermanRule{});

double kde_eval(const KernelDensityEstimate& kde, ClassLabel c, std::size_t feature, double x);
double kde_log_eval(const KernelDensityEstimate& kde, ClassLabel c, std::size_t feature, double x);

}  // namespace lroc
