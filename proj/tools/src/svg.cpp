#include "lroc_cli/svg.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "lroc/error.hpp"

namespace lroc::cli {

namespace {

constexpr double kLeft = 50.0;
constexpr double kTop = 20.0;
constexpr double kSide = 360.0;

struct Style {
  const char* colour;
  const char* dash;  // empty for solid
};

constexpr std::array<Style, 6> kStyles{{{"#1f4e9c", ""},
                                        {"#c0392b", "6,4"},
                                        {"#2e8b57", "2,3"},
                                        {"#8e44ad", "8,3,2,3"},
                                        {"#d35400", "1,2"},
                                        {"#333333", "10,5"}}};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string px(double x) { return coord(kLeft + kSide * x); }
std::string py(double y) { return coord(kTop + kSide * (1.0 - y)); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void emit_svg(std::ostream& out, const std::vector<NamedCurve>& curves) {
  if (curves.empty()) throw std::invalid_argument("nothing to plot");
  const double legend_top = kTop + kSide + 45.0;
  const double height = legend_top + 18.0 * static_cast<double>(curves.size()) + 10.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"430\" height=\"" << coord(height)
      << "\" viewBox=\"0 0 430 " << coord(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"" << px(0) << "\" y=\"" << py(1) << "\" width=\"" << coord(kSide) << "\" height=\""
      << coord(kSide) << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (double t : {0.0, 0.5, 1.0}) {
    out << "<text x=\"" << px(t) << "\" y=\"" << coord(kTop + kSide + 15) << "\" text-anchor=\"middle\">"
        << (t == 0.5 ? "0.5" : t == 0.0 ? "0" : "1") << "</text>\n";
    out << "<text x=\"" << coord(kLeft - 6) << "\" y=\"" << py(t) << "\" text-anchor=\"end\">"
        << (t == 0.5 ? "0.5" : t == 0.0 ? "0" : "1") << "</text>\n";
  }
  out << "<text x=\"" << px(0.5) << "\" y=\"" << coord(kTop + kSide + 32)
      << "\" text-anchor=\"middle\">false positive rate</text>\n";
  out << "<text x=\"15\" y=\"" << py(0.5) << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " << py(0.5)
      << ")\">true positive rate</text>\n";
  out << "<line class=\"reference\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\""
      << py(1) << "\" stroke=\"#999999\" stroke-dasharray=\"3,3\"/>\n";

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Style& s = kStyles[i % kStyles.size()];
    out << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\"";
    if (*s.dash) out << " stroke-dasharray=\"" << s.dash << "\"";
    out << " points=\"";
    const auto& pts = curves[i].curve.curve().vertices();
    for (std::size_t k = 0; k < pts.size(); ++k) out << (k ? " " : "") << px(pts[k].x) << ',' << py(pts[k].y);
    out << "\"/>\n";
  }

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Style& s = kStyles[i % kStyles.size()];
    const std::string y = coord(legend_top + 18.0 * static_cast<double>(i));
    out << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << y << "\" x2=\"" << coord(kLeft + 30) << "\" y2=\"" << y
        << "\" stroke=\"" << s.colour << "\" stroke-width=\"1.5\"";
    if (*s.dash) out << " stroke-dasharray=\"" << s.dash << "\"";
    out << "/>\n<text x=\"" << coord(kLeft + 38) << "\" y=\"" << coord(legend_top + 18.0 * static_cast<double>(i) + 4)
        << "\">" << escape(curves[i].label) << "</text>\n";
  }
  out << "</svg>\n";
}

void emit_svg(const std::string& path, const std::vector<NamedCurve>& curves) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  emit_svg(out, curves);
  if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace lroc::cli
