#include "lroc/roc_curve.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lroc {

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::exact:
      return "exact";
    case CurveKind::sampled:
      return "sampled";
    case CurveKind::staircase:
      return "staircase";
  }
  return "unknown";
}

CurveKind curve_kind_from_string(std::string_view text) {
  if (text == "exact") return CurveKind::exact;
  if (text == "sampled") return CurveKind::sampled;
  if (text == "staircase") return CurveKind::staircase;
  throw std::invalid_argument("unknown curve kind '" + std::string(text) + "'");
}

PiecewiseCurve PiecewiseCurve::exact(std::vector<Segment> segments) {
  if (segments.empty()) throw std::invalid_argument("exact curve needs at least one segment");
  if (segments.front().x_lo != 0 || segments.back().x_hi != 1)
    throw std::invalid_argument("exact curve segments must cover [0,1]");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.x_lo < s.x_hi)) throw std::invalid_argument("empty or reversed curve segment");
    if (i + 1 < segments.size()) {
      const auto& next = segments[i + 1];
      if (s.x_hi != next.x_lo) throw std::invalid_argument("curve segments leave a gap");
      if (s.at(s.x_hi) != next.at(next.x_lo))
        throw std::invalid_argument("curve is discontinuous at x = " + format_rational(s.x_hi));
    }
  }
  PiecewiseCurve c;
  c.kind_ = CurveKind::exact;
  c.segments_ = std::move(segments);
  for (const auto& s : c.segments_) {
    c.fast_segments_.push_back(
        {to_double(s.x_lo), to_double(s.x_hi), to_double(s.slope), to_double(s.intercept)});
    c.points_.push_back({to_double(s.x_lo), to_double(s.at(s.x_lo))});
  }
  const auto& last = c.segments_.back();
  c.points_.push_back({1.0, to_double(last.at(last.x_hi))});
  return c;
}

PiecewiseCurve PiecewiseCurve::polyline(CurveKind kind, std::vector<Point> points) {
  if (points.size() < 2) throw std::invalid_argument("curve needs at least two points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("non-finite curve point");
    if (i > 0 && p.x < points[i - 1].x) throw std::invalid_argument("curve points must be sorted by x");
  }
  if (points.front().x != 0.0 || points.back().x != 1.0)
    throw std::invalid_argument("curve points must span x = 0 to x = 1");
  PiecewiseCurve c;
  c.kind_ = kind;
  c.points_ = std::move(points);
  return c;
}

PiecewiseCurve PiecewiseCurve::sampled(std::vector<Point> points) {
  return polyline(CurveKind::sampled, std::move(points));
}

PiecewiseCurve PiecewiseCurve::staircase(std::vector<Point> points) {
  return polyline(CurveKind::staircase, std::move(points));
}

const std::vector<Segment>& PiecewiseCurve::segments() const {
  if (!is_exact()) throw std::logic_error("segments requested from a non-exact curve");
  return segments_;
}

double PiecewiseCurve::operator()(double x) const {
  x = std::clamp(x, 0.0, 1.0);
  if (is_exact()) {
    auto it = std::upper_bound(fast_segments_.begin(), fast_segments_.end(), x,
                               [](double v, const FastSegment& s) { return v < s.x_lo; });
    const auto& s = *std::prev(it);
    return s.slope * x + s.intercept;
  }
  // Last point with px <= x is the top of any vertical run at x.
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const Point& p) { return v < p.x; });
  if (it == points_.end()) return points_.back().y;
  const auto& lo = *std::prev(it);
  const auto& hi = *it;
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Rational PiecewiseCurve::exact_at(const Rational& x) const {
  if (!is_exact()) throw std::logic_error("exact evaluation of a non-exact curve");
  if (x < 0 || x > 1) throw std::invalid_argument("curve argument outside [0,1]");
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](const Rational& v, const Segment& s) { return v < s.x_lo; });
  return std::prev(it)->at(x);
}

Rational PiecewiseCurve::exact_area() const {
  if (!is_exact()) throw std::logic_error("exact area of a non-exact curve");
  Rational area = 0;
  for (const auto& s : segments_)
    area += s.slope * (s.x_hi * s.x_hi - s.x_lo * s.x_lo) / 2 + s.intercept * (s.x_hi - s.x_lo);
  return area;
}

double PiecewiseCurve::area() const {
  if (is_exact()) return to_double(exact_area());
  double area = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i)
    area += (points_[i].x - points_[i - 1].x) * (points_[i].y + points_[i - 1].y) / 2.0;
  return area;
}

bool operator==(const PiecewiseCurve& a, const PiecewiseCurve& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.is_exact()) {
    if (a.segments_.size() != b.segments_.size()) return false;
    for (std::size_t i = 0; i < a.segments_.size(); ++i) {
      const auto& s = a.segments_[i];
      const auto& t = b.segments_[i];
      if (s.x_lo != t.x_lo || s.x_hi != t.x_hi || s.slope != t.slope || s.intercept != t.intercept)
        return false;
    }
    return true;
  }
  return a.points_ == b.points_;
}

namespace {

// Keeps one point per x at the ends of the path (the hull-side extreme), so
// vertical runs at x = 0 or x = 1 do not count as interior kinks.
std::vector<Point> trim_end_runs(std::span<const Point> points) {
  std::vector<Point> out(points.begin(), points.end());
  auto collapse_front = [](std::vector<Point>& v) {
    std::size_t k = 0;
    while (k + 1 < v.size() && v[k + 1].x == v.front().x) ++k;
    if (k > 0) {
      double top = v.front().y;
      for (std::size_t i = 0; i <= k; ++i) top = std::max(top, v[i].y);
      v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
      v.front().y = top;
    }
  };
  collapse_front(out);
  std::reverse(out.begin(), out.end());
  collapse_front(out);
  std::reverse(out.begin(), out.end());
  return out;
}

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

double concavity_violation(std::span<const Point> raw) {
  const std::vector<Point> points = trim_end_runs(raw);
  if (points.size() < 3) return 0.0;
  std::vector<Point> hull;
  for (const auto& p : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  // Hull x is strictly increasing: interior vertical runs collapse to their top.
  double worst = 0.0;
  std::size_t h = 0;
  for (const auto& p : points) {
    while (h + 1 < hull.size() && hull[h + 1].x <= p.x) ++h;
    double envelope = hull[h].y;
    if (h + 1 < hull.size()) {
      const auto& a = hull[h];
      const auto& b = hull[h + 1];
      envelope = a.y + (b.y - a.y) * (p.x - a.x) / (b.x - a.x);
    }
    worst = std::max(worst, envelope - p.y);
  }
  return worst;
}

double convexity_violation(std::span<const Point> points) {
  std::vector<Point> flipped(points.begin(), points.end());
  for (auto& p : flipped) p.y = -p.y;
  return concavity_violation(flipped);
}

RocCurve::RocCurve(PiecewiseCurve curve) : curve_(std::move(curve)) {
  constexpr double kSlack = 1e-12;
  if (curve_.is_exact()) {
    if (curve_.exact_at(0) != 0 || curve_.exact_at(1) != 1)
      throw std::invalid_argument("ROC curve must pass through (0,0) and (1,1)");
    for (const auto& s : curve_.segments())
      if (s.slope < 0) throw std::invalid_argument("ROC curve must be nondecreasing");
    return;
  }
  const auto& pts = curve_.vertices();
  if (pts.front().y != 0.0 || std::abs(pts.back().y - 1.0) > kSlack)
    throw std::invalid_argument("ROC curve must pass through (0,0) and (1,1)");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].y < -kSlack || pts[i].y > 1.0 + kSlack)
      throw std::invalid_argument("ROC values must lie in [0,1]");
    if (i > 0 && pts[i].y < pts[i - 1].y - kSlack)
      throw std::invalid_argument("ROC curve must be nondecreasing");
  }
}

double RocCurve::concavity_violation() const {
  return lroc::concavity_violation(curve_.vertices());
}

bool RocCurve::is_concave(double tolerance) const {
  if (curve_.is_exact()) {
    const auto& segs = curve_.segments();
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].slope > segs[i - 1].slope) return false;
    return true;
  }
  return concavity_violation() <= tolerance;
}

double auc(const RocCurve& curve) { return curve.curve().area(); }

Rational exact_auc(const RocCurve& curve) { return curve.curve().exact_area(); }

RocCurve resample(const RocCurve& curve, std::span<const double> xs) {
  std::vector<Point> pts;
  pts.reserve(xs.size() + 2);
  pts.push_back({0.0, 0.0});
  for (double x : xs) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("resample grid must lie in (0,1)");
    if (x <= pts.back().x) throw std::invalid_argument("resample grid must be strictly increasing");
    pts.push_back({x, curve(x)});
  }
  pts.push_back({1.0, 1.0});
  return RocCurve(PiecewiseCurve::sampled(std::move(pts)));
}

std::vector<double> uniform_grid(std::size_t n) {
  if (n < 2) throw std::invalid_argument("grid needs n >= 2");
  std::vector<double> xs;
  xs.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) xs.push_back(static_cast<double>(i) / static_cast<double>(n));
  return xs;
}

double sup_distance(const RocCurve& a, const RocCurve& b, std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(a(x) - b(x)));
  return worst;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("curve CSV line " + std::to_string(line) + ": bad number '" +
                                std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const PiecewiseCurve& curve) {
  out << "# kind=" << to_string(curve.kind()) << '\n';
  if (curve.is_exact()) {
    out << "x_lo,x_hi,slope,intercept\n";
    for (const auto& s : curve.segments())
      out << format_rational(s.x_lo) << ',' << format_rational(s.x_hi) << ','
          << format_rational(s.slope) << ',' << format_rational(s.intercept) << '\n';
    return;
  }
  out << "fpr,tpr\n";
  for (const auto& p : curve.vertices()) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

PiecewiseCurve read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || line.rfind("# kind=", 0) != 0)
    throw std::invalid_argument("curve CSV must start with '# kind=<kind>'");
  const CurveKind kind = curve_kind_from_string(std::string_view(line).substr(7));
  if (!next_line()) throw std::invalid_argument("curve CSV lacks a header row");
  const std::string expected = kind == CurveKind::exact ? "x_lo,x_hi,slope,intercept" : "fpr,tpr";
  if (line != expected) throw std::invalid_argument("curve CSV header must be '" + expected + "'");

  if (kind == CurveKind::exact) {
    std::vector<Segment> segs;
    while (next_line()) {
      auto f = split(line);
      if (f.size() != 4)
        throw std::invalid_argument("curve CSV line " + std::to_string(line_no) + ": expected 4 fields");
      segs.push_back({parse_rational(f[0]), parse_rational(f[1]), parse_rational(f[2]),
                      parse_rational(f[3])});
    }
    return PiecewiseCurve::exact(std::move(segs));
  }
  std::vector<Point> pts;
  while (next_line()) {
    auto f = split(line);
    if (f.size() != 2)
      throw std::invalid_argument("curve CSV line " + std::to_string(line_no) + ": expected 2 fields");
    pts.push_back({parse_double(f[0], line_no), parse_double(f[1], line_no)});
  }
  return kind == CurveKind::staircase ? PiecewiseCurve::staircase(std::move(pts))
                                      : PiecewiseCurve::sampled(std::move(pts));
}

}  // namespace lroc
