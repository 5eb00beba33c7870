#include <gtest/gtest.h>

#include <stdexcept>

#include "lroc/rational.hpp"

using lroc::format_rational;
using lroc::parse_rational;
using lroc::Rational;

TEST(Rational, ParsesFractions) {
  EXPECT_EQ(parse_rational("58/153"), Rational(58, 153));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-1.5e-3"), Rational(-3, 2000));
  EXPECT_EQ(parse_rational("2E2"), Rational(200));
}

TEST(Rational, LeadingZerosAreDecimalNotOctal) {
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("0.09"), Rational(9, 100));
  EXPECT_EQ(parse_rational("08/09"), Rational(8, 9));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, FormatRoundTrips) {
  for (const Rational& r : {Rational(0), Rational(319, 17), Rational(-5, 9), Rational(12)})
    EXPECT_EQ(parse_rational(format_rational(r)), r);
  EXPECT_EQ(format_rational(Rational(4, 2)), "2");
}
