#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lroc {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "a/b", "a", or a decimal literal such as "0.25" or "-1.5e-3" (the latter
// converted exactly from its decimal digits, not through a double).
Rational parse_rational(std::string_view text);

// Canonical "a/b" (or "a" when the denominator is 1).
std::string format_rational(const Rational& r);

}  // namespace lroc
