#pragma once

#include <iosfwd>
#include <string>

#include "lroc/kde.hpp"

namespace lroc::cli {

/// Reads comma-separated data with a header row. The column named
/// `label_column` holds class labels: rows equal to `positive_label` are
/// positive, all others negative. Every other column is a numeric feature.
/// No quoting. Throws DataError naming the row and column of a bad cell.
LabeledSample read_labeled_csv(std::istream& in, const std::string& label_column,
                               const std::string& positive_label);

}  // namespace lroc::cli
