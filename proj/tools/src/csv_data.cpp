#include "lroc_cli/csv_data.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <string_view>
#include <vector>

#include "lroc/error.hpp"

namespace lroc::cli {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) return out;
    line.remove_prefix(comma + 1);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledSample read_labeled_csv(std::istream& in, const std::string& label_column,
                               const std::string& positive_label) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("CSV input is empty");
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  std::vector<std::string> header;
  for (auto cell : split(line)) header.emplace_back(trim(cell));

  std::size_t label_index = header.size();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] == label_column) {
      if (label_index != header.size()) throw DataError("label column '" + label_column + "' appears twice");
      label_index = j;
    } else {
      names.push_back(header[j]);
    }
  }
  if (label_index == header.size()) throw DataError("label column '" + label_column + "' not found in header");
  if (names.empty()) throw DataError("CSV has no feature columns");

  std::vector<double> values;
  std::vector<ClassLabel> labels;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw DataError("row " + std::to_string(row) + ": expected " + std::to_string(header.size()) +
                      " cells, found " + std::to_string(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const std::string_view cell = trim(cells[j]);
      if (j == label_index) {
        if (cell.empty()) throw DataError("row " + std::to_string(row) + ": missing label");
        labels.push_back(cell == positive_label ? ClassLabel::positive : ClassLabel::negative);
        continue;
      }
      const std::string where = "row " + std::to_string(row) + ", column '" + header[j] + "'";
      if (cell.empty()) throw DataError(where + ": missing value");
      double v = 0.0;
      const char* first = cell.data();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw DataError(where + ": '" + std::string(cell) + "' is not a number");
      if (!std::isfinite(v)) throw DataError(where + ": value is not finite");
      values.push_back(v);
    }
  }
  if (labels.empty()) throw DataError("CSV has no data rows");

  const auto n = static_cast<Eigen::Index>(labels.size());
  const auto p = static_cast<Eigen::Index>(names.size());
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < p; ++k) x(i, k) = values[static_cast<std::size_t>(i * p + k)];
  const auto positives = std::count(labels.begin(), labels.end(), ClassLabel::positive);
  if (positives == 0)
    throw DataError("no row has label '" + positive_label + "' in column '" + label_column + "'");
  if (positives == n) throw DataError("every row is positive; need both classes");
  return LabeledSample(std::move(x), std::move(labels), std::move(names));
}

}  // namespace lroc::cli
