#include <gtest/gtest.h>

#include "antirotor/cas/rational.hpp"
#include "antirotor/errors.hpp"

using antirotor::UsageError;
using namespace antirotor::cas;

TEST(Rational, ParsesFractionsAndReduces) {
  BigRational q = parse_rational("6/-8");
  EXPECT_EQ(q, make_rational(-3, 4));
  EXPECT_EQ(to_string(q), "-3/4");
  EXPECT_EQ(q.get_den(), 4);
}

TEST(Rational, ZeroIsZeroOverOne) {
  BigRational q = parse_rational("0/17");
  EXPECT_EQ(q.get_num(), 0);
  EXPECT_EQ(q.get_den(), 1);
  EXPECT_EQ(to_string(q), "0");
}

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("0.1"), make_rational(1, 10));
  EXPECT_EQ(parse_rational("-1.25"), make_rational(-5, 4));
  EXPECT_EQ(parse_rational("2e3"), BigRational(2000));
  EXPECT_EQ(parse_rational("1.5e-2"), make_rational(3, 200));
}

TEST(Rational, RejectsMalformedLiterals) {
  EXPECT_THROW(parse_rational(""), UsageError);
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("abc"), UsageError);
  EXPECT_THROW(parse_rational("1/2/3"), UsageError);
}

TEST(Rational, SquareRoots) {
  BigRational r;
  EXPECT_TRUE(rational_sqrt(make_rational(9, 4), &r));
  EXPECT_EQ(r, make_rational(3, 2));
  EXPECT_FALSE(rational_sqrt(BigRational(2), &r));
  EXPECT_FALSE(rational_sqrt(BigRational(-4), &r));
}
