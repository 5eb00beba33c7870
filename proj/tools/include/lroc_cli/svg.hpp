#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lroc/roc_curve.hpp"

namespace lroc::cli {

struct NamedCurve {
  std::string label;
  RocCurve curve;
};

// Unit-square ROC plot with a dashed diagonal reference line, one polyline
// per curve in a distinct style, and a legend. Output bytes depend only on
// the curves and labels.
void emit_svg(std::ostream& out, const std::vector<NamedCurve>& curves);
void emit_svg(const std::string& path, const std::vector<NamedCurve>& curves);

}  // namespace lroc::cli
