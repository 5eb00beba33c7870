#include "lroc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace lroc {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

cpp_int pow10(long n) {
  cpp_int r = 1;
  for (long i = 0; i < n; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  auto fail = [&] { throw std::invalid_argument("not a number: '" + std::string(original) + "'"); };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) fail();
  if (!int_part.empty() && !all_digits(int_part)) fail();
  if (!frac_part.empty() && !all_digits(frac_part)) fail();

  // cpp_int reads a leading zero as an octal prefix.
  std::string combined = std::string(int_part) + std::string(frac_part);
  combined.erase(0, std::min(combined.find_first_not_of('0'), combined.size()));
  cpp_int digits = combined.empty() ? cpp_int(0) : cpp_int(combined);
  exponent -= static_cast<long>(frac_part.size());
  Rational r = exponent >= 0 ? Rational(digits * pow10(exponent)) : Rational(digits, pow10(-exponent));
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

std::string format_rational(const Rational& r) {
  const auto& num = boost::multiprecision::numerator(r);
  const auto& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace lroc
