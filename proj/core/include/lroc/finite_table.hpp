#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lroc/lr_distribution.hpp"
#include "lroc/rational.hpp"

namespace lroc {

// Counts (or masses) per ordered category under the negative and positive class.
class FiniteTablePair {
 public:
  // Throws std::invalid_argument on negative counts, mismatched lengths, an
  // empty row, or a category present in exactly one row.
  FiniteTablePair(std::vector<std::string> labels, std::vector<Rational> counts_minus,
                  std::vector<Rational> counts_plus);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& counts_minus() const { return counts_minus_; }
  const std::vector<Rational>& counts_plus() const { return counts_plus_; }
  Rational total_minus() const { return total_minus_; }
  Rational total_plus() const { return total_plus_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> counts_minus_;
  std::vector<Rational> counts_plus_;
  Rational total_minus_;
  Rational total_plus_;
};

LrDistribution finite_lr_distribution(const FiniteTablePair& m);

// Expands integer counts into per-subject scores equal to the category's
// 1-based position, for score-ordered empirical ROCs.
std::pair<std::vector<double>, std::vector<double>> ordinal_scores(const FiniteTablePair& m);

}  // namespace lroc
