#include "lroc/finite_table.hpp"

#include <stdexcept>

namespace lroc {

FiniteTablePair::FiniteTablePair(std::vector<std::string> labels, std::vector<Rational> counts_minus,
                                 std::vector<Rational> counts_plus)
    : labels_(std::move(labels)), counts_minus_(std::move(counts_minus)), counts_plus_(std::move(counts_plus)) {
  const std::size_t k = counts_minus_.size();
  if (k == 0 || counts_plus_.size() != k)
    throw std::invalid_argument("finite table: rows must have the same nonzero number of categories");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < k; ++i) labels_.push_back(std::to_string(i + 1));
  } else if (labels_.size() != k) {
    throw std::invalid_argument("finite table: one label per category required");
  }
  total_minus_ = 0;
  total_plus_ = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (counts_minus_[i] < 0 || counts_plus_[i] < 0)
      throw std::invalid_argument("finite table: counts must be nonnegative");
    if ((counts_minus_[i] == 0) != (counts_plus_[i] == 0))
      throw std::invalid_argument("finite table: category '" + labels_[i] +
                                  "' has mass in only one row (mutual absolute continuity)");
    total_minus_ += counts_minus_[i];
    total_plus_ += counts_plus_[i];
  }
  if (total_minus_ == 0 || total_plus_ == 0) throw std::invalid_argument("finite table: empty row");
}

LrDistribution finite_lr_distribution(const FiniteTablePair& m) {
  std::vector<AtomCell> cells;
  cells.reserve(m.counts_minus().size());
  for (std::size_t i = 0; i < m.counts_minus().size(); ++i)
    cells.push_back({m.counts_minus()[i] / m.total_minus(), m.counts_plus()[i] / m.total_plus()});
  return LrDistribution::from_cells(cells);
}

std::pair<std::vector<double>, std::vector<double>> ordinal_scores(const FiniteTablePair& m) {
  std::pair<std::vector<double>, std::vector<double>> out;
  auto expand = [](const std::vector<Rational>& counts, std::vector<double>& scores) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (boost::multiprecision::denominator(counts[i]) != 1)
        throw std::invalid_argument("ordinal scores need integer counts");
      const auto n = boost::multiprecision::numerator(counts[i]).convert_to<long long>();
      scores.insert(scores.end(), static_cast<std::size_t>(n), static_cast<double>(i + 1));
    }
  };
  expand(m.counts_minus(), out.first);
  expand(m.counts_plus(), out.second);
  return out;
}

}  // namespace lroc
