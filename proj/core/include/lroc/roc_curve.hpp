#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "lroc/rational.hpp"

namespace lroc {

enum class CurveKind {
  exact,      // piecewise linear with rational segments
  sampled,    // points joined by straight lines
  staircase,  // empirical step path, never asserted to be concave
};

std::string_view to_string(CurveKind kind);
CurveKind curve_kind_from_string(std::string_view text);

// y = slope * x + intercept on [x_lo, x_hi).
struct Segment {
  Rational x_lo;
  Rational x_hi;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
};

struct Point {
  double x;
  double y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Continuous piecewise function on [0,1], either exact (rational segments)
/// or a polyline through sorted points. Validated on construction:
/// segments tile [0,1] and join continuously; polyline x is nondecreasing and
/// starts at 0 and ends at 1.
class PiecewiseCurve {
 public:
  static PiecewiseCurve exact(std::vector<Segment> segments);
  static PiecewiseCurve sampled(std::vector<Point> points);
  static PiecewiseCurve staircase(std::vector<Point> points);

  CurveKind kind() const { return kind_; }
  bool is_exact() const { return kind_ == CurveKind::exact; }

  const std::vector<Segment>& segments() const;  // exact only
  // Polyline vertices; for exact curves the segment breakpoints.
  const std::vector<Point>& vertices() const { return points_; }

  double operator()(double x) const;
  Rational exact_at(const Rational& x) const;  // exact only

  // Area under the curve; exact_area() for exact curves only.
  double area() const;
  Rational exact_area() const;

  friend bool operator==(const PiecewiseCurve& a, const PiecewiseCurve& b);

 private:
  PiecewiseCurve() = default;
  static PiecewiseCurve polyline(CurveKind kind, std::vector<Point> points);

  struct FastSegment {
    double x_lo, x_hi, slope, intercept;
  };

  CurveKind kind_ = CurveKind::sampled;
  std::vector<Segment> segments_;
  std::vector<FastSegment> fast_segments_;
  std::vector<Point> points_;
};

// Largest vertical distance between the polyline and its least concave
// majorant (0 for concave curves). Points must be sorted by x.
double concavity_violation(std::span<const Point> points);
// Same against the greatest convex minorant.
double convexity_violation(std::span<const Point> points);

/// A ROC function: a PiecewiseCurve with ROC(0) = 0, ROC(1) = 1, values in
/// [0,1] and nondecreasing. Concavity is a property, not an invariant, so
/// improper curves (score-based, binormal with a hook, staircases) are
/// representable.
class RocCurve {
 public:
  explicit RocCurve(PiecewiseCurve curve);

  const PiecewiseCurve& curve() const { return curve_; }
  CurveKind kind() const { return curve_.kind(); }
  double operator()(double x) const { return curve_(x); }
  Rational exact_at(const Rational& x) const { return curve_.exact_at(x); }

  // Exact curves: slopes nonincreasing, no tolerance. Others: violation <= tolerance.
  bool is_concave(double tolerance = 0.0) const;
  double concavity_violation() const;

  friend bool operator==(const RocCurve&, const RocCurve&) = default;

 private:
  PiecewiseCurve curve_;
};

double auc(const RocCurve& curve);
Rational exact_auc(const RocCurve& curve);

// Linear interpolation of `curve` at the given FPR values, endpoints added.
RocCurve resample(const RocCurve& curve, std::span<const double> xs);

// x = 1/n, ..., (n-1)/n.
std::vector<double> uniform_grid(std::size_t n);

// Max |a(x) - b(x)| over xs.
double sup_distance(const RocCurve& a, const RocCurve& b, std::span<const double> xs);

// CSV with a "# kind=<kind>" line, then "x_lo,x_hi,slope,intercept" (exact,
// rationals as a/b) or "fpr,tpr" (sampled, staircase; shortest round-trip
// decimal). Reading restores the curve exactly.
void write_csv(std::ostream& out, const PiecewiseCurve& curve);
PiecewiseCurve read_csv(std::istream& in);

}  // namespace lroc
