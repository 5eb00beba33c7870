#include "lroc/kde.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lroc/error.hpp"

namespace lroc {

namespace {

std::size_t index_of(ClassLabel c) { return c == ClassLabel::negative ? 0 : 1; }

// Type-7 sample quantile of sorted values.
double quantile7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

LabeledSample::LabeledSample(Eigen::MatrixXd features, std::vector<ClassLabel> labels,
                             std::vector<std::string> feature_names)
    : features_(std::move(features)), labels_(std::move(labels)), names_(std::move(feature_names)) {
  if (features_.cols() < 1) throw DataError("sample needs at least one feature");
  if (static_cast<std::size_t>(features_.rows()) != labels_.size())
    throw DataError("sample: one label per row required");
  if (names_.empty())
    for (Eigen::Index k = 0; k < features_.cols(); ++k) names_.push_back("x" + std::to_string(k + 1));
  if (names_.size() != static_cast<std::size_t>(features_.cols()))
    throw DataError("sample: one name per feature required");
  for (Eigen::Index i = 0; i < features_.rows(); ++i)
    for (Eigen::Index k = 0; k < features_.cols(); ++k)
      if (!std::isfinite(features_(i, k)))
        throw DataError("sample: non-finite value in row " + std::to_string(i + 1) + ", feature '" +
                        names_[static_cast<std::size_t>(k)] + "'");
  if (count(ClassLabel::negative) < 2 || count(ClassLabel::positive) < 2)
    throw DataError("sample: each class needs at least two rows");
}

std::size_t LabeledSample::count(ClassLabel c) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), c));
}

Eigen::MatrixXd LabeledSample::rows(ClassLabel c) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(count(c)), features_.cols());
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == c) out.row(r++) = features_.row(static_cast<Eigen::Index>(i));
  return out;
}

BandwidthRule parse_bandwidth_rule(const std::string& text) {
  if (text == "silverman") return SilvermanRule{};
  if (text == "scott") return ScottRule{};
  constexpr std::string_view prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    FixedBandwidth fixed;
    std::string_view rest = std::string_view(text).substr(prefix.size());
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size() || !(v > 0) || !std::isfinite(v))
        throw UsageError("bandwidth values must be positive numbers, got '" + std::string(item) + "'");
      fixed.values.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return fixed;
  }
  throw UsageError("unknown bandwidth rule '" + text + "' (silverman, scott, fixed:v1,v2,...)");
}

double rule_of_thumb_bandwidth(std::vector<double> values, double factor) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("bandwidth needs at least two values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  std::sort(values.begin(), values.end());
  const double iqr = quantile7(values, 0.75) - quantile7(values, 0.25);
  const double spread = iqr > 0 ? std::min(sd, iqr / 1.34) : sd;
  return factor * spread * std::pow(static_cast<double>(n), -0.2);
}

KernelDensityEstimate::KernelDensityEstimate(std::array<std::vector<std::vector<double>>, 2> centers,
                                             std::array<std::vector<double>, 2> bandwidths)
    : centers_(std::move(centers)), bandwidths_(std::move(bandwidths)) {
  const std::size_t p = bandwidths_[0].size();
  if (p == 0) throw std::invalid_argument("KDE needs at least one feature");
  for (std::size_t s = 0; s < 2; ++s) {
    if (bandwidths_[s].size() != p || centers_[s].size() != p)
      throw std::invalid_argument("KDE: inconsistent feature count");
    for (std::size_t k = 0; k < p; ++k) {
      if (!(bandwidths_[s][k] > 0) || !std::isfinite(bandwidths_[s][k]))
        throw std::invalid_argument("KDE bandwidths must be positive");
      if (centers_[s][k].empty()) throw std::invalid_argument("KDE needs at least one center");
    }
  }
}

const std::vector<double>& KernelDensityEstimate::centers(ClassLabel c, std::size_t feature) const {
  return centers_[index_of(c)].at(feature);
}

double KernelDensityEstimate::bandwidth(ClassLabel c, std::size_t feature) const {
  return bandwidths_[index_of(c)].at(feature);
}

KernelDensityEstimate fit_kde(const LabeledSample& sample, const BandwidthRule& rule) {
  const auto p = static_cast<std::size_t>(sample.dimension());
  std::array<std::vector<std::vector<double>>, 2> centers;
  std::array<std::vector<double>, 2> bandwidths;
  if (const auto* fixed = std::get_if<FixedBandwidth>(&rule)) {
    if (fixed->values.size() != p && fixed->values.size() != 2 * p)
      throw DataError("fixed bandwidth needs " + std::to_string(p) + " or " + std::to_string(2 * p) +
                      " values, got " + std::to_string(fixed->values.size()));
  }
  for (ClassLabel c : {ClassLabel::negative, ClassLabel::positive}) {
    const std::size_t s = index_of(c);
    const Eigen::MatrixXd rows = sample.rows(c);
    for (std::size_t k = 0; k < p; ++k) {
      const auto col = rows.col(static_cast<Eigen::Index>(k));
      std::vector<double> values(col.data(), col.data() + col.size());
      double h = 0.0;
      if (const auto* fixed = std::get_if<FixedBandwidth>(&rule)) {
        h = fixed->values.size() == p ? fixed->values[k] : fixed->values[s * p + k];
      } else {
        const double factor = std::holds_alternative<SilvermanRule>(rule) ? 0.9 : 1.06;
        h = rule_of_thumb_bandwidth(values, factor);
        if (!(h > 0))
          throw DataError("feature '" + sample.feature_names()[k] + "' has zero variance in the " +
                          (c == ClassLabel::negative ? "negative" : "positive") + " class");
      }
      centers[s].push_back(std::move(values));
      bandwidths[s].push_back(h);
    }
  }
  return KernelDensityEstimate(std::move(centers), std::move(bandwidths));
}

double kde_log_eval(const KernelDensityEstimate& kde, ClassLabel c, std::size_t feature, double x) {
  const auto& centers = kde.centers(c, feature);
  const double h = kde.bandwidth(c, feature);
  double closest = std::numeric_limits<double>::infinity();
  for (double m : centers) closest = std::min(closest, std::abs(x - m));
  const double top = -0.5 * (closest / h) * (closest / h);
  double sum = 0.0;
  for (double m : centers) {
    const double z = (x - m) / h;
    sum += std::exp(-0.5 * z * z - top);
  }
  return top + std::log(sum) - std::log(static_cast<double>(centers.size()) * h) -
         0.5 * std::log(2.0 * std::numbers::pi);
}

double kde_eval(const KernelDensityEstimate& kde, ClassLabel c, std::size_t feature, double x) {
  return std::exp(kde_log_eval(kde, c, feature, x));
}

}  // namespace lroc
