#include "lattice/exact.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lattice;

TEST(FloorDiv, Examples) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(46, 21), 2);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(-7, -2), 3);
  EXPECT_EQ(floor_mod(-7, 2), 1);
  EXPECT_THROW(floor_div(1, 0), InputError);
}

TEST(FloorDiv, BracketsQuotient) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    const Int n = dist(rng);
    Int d = dist(rng) % 500;
    if (d == 0) d = 7;
    const Int q = floor_div(n, d);
    if (d > 0) {
      EXPECT_LE(d * q, n);
      EXPECT_LT(n, d * (q + 1));
    } else {
      EXPECT_GE(d * q, n);
      EXPECT_GT(n, d * (q + 1));
    }
  }
}

TEST(FloorDiv, LargeOperandsStayExact) {
  const Int big = boost::multiprecision::pow(Int(10), 40) + 3;
  EXPECT_EQ(floor_div(big, 10), boost::multiprecision::pow(Int(10), 39));
  EXPECT_EQ(floor_div(-big, 10), -boost::multiprecision::pow(Int(10), 39) - 1);
}

TEST(RationalFloorCeil, Examples) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil(Rational(1, 3)), 1);
  EXPECT_EQ(floor(Rational(2, 3)), 0);
  EXPECT_EQ(floor(Rational(-4)), -4);
  EXPECT_EQ(ceil(Rational(-4)), -4);
}

TEST(RationalFloorCeil, BracketValue) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 50);
  for (int i = 0; i < 2000; ++i) {
    const Rational x(Int(num(rng)), Int(den(rng)));
    const Int f = floor(x), c = ceil(x);
    EXPECT_LE(Rational(f), x);
    EXPECT_LE(x, Rational(c));
    EXPECT_TRUE(c - f == 0 || c - f == 1);
    EXPECT_EQ(c == f, x.is_integer());
  }
}

TEST(Egcd, Examples) {
  auto r = egcd(3, 7);
  EXPECT_EQ(r.g, 1);
  EXPECT_EQ(3 * r.u + 7 * r.v, 1);
  EXPECT_EQ(egcd(6, 10).g, 2);
  auto z = egcd(0, 5);
  EXPECT_EQ(z.g, 5);
  EXPECT_EQ(z.u, 0);
  EXPECT_EQ(z.v, 1);
  EXPECT_THROW(egcd(0, 0), InputError);
}

TEST(Egcd, BezoutIdentityHolds) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> dist(-5000, 5000);
  for (int i = 0; i < 2000; ++i) {
    const Int a = dist(rng), b = dist(rng);
    if (a == 0 && b == 0) continue;
    auto [g, u, v] = egcd(a, b);
    EXPECT_GT(g, 0);
    EXPECT_EQ(a * u + b * v, g);
    EXPECT_EQ(g, gcd(a, b));
  }
}

TEST(Rational, NormalizedOnConstruction) {
  const Rational r(Int(35), Int(-10));
  EXPECT_EQ(r.num(), -7);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(Int(0), Int(-5)).den(), 1);
  EXPECT_EQ(Rational(Int(6), Int(4)), Rational(Int(3), Int(2)));
  EXPECT_THROW(Rational(Int(1), Int(0)), InputError);
}

TEST(Rational, Arithmetic) {
  const Rational a(Int(1), Int(3)), b(Int(1), Int(6));
  EXPECT_EQ(a + b, Rational(Int(1), Int(2)));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(Int(1), Int(18)));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_THROW(a / Rational(0), InputError);
  EXPECT_LT(b, a);
  EXPECT_LT(-a, b);
}

TEST(ParseRational, AcceptedForms) {
  EXPECT_EQ(parse_rational("3.5"), Rational(Int(7), Int(2)));
  EXPECT_EQ(parse_rational("-7/2"), Rational(Int(-7), Int(2)));
  EXPECT_EQ(parse_rational("+12"), Rational(12));
  EXPECT_EQ(parse_rational("-0.125"), Rational(Int(-1), Int(8)));
  EXPECT_EQ(parse_rational(".5"), Rational(Int(1), Int(2)));
  EXPECT_EQ(parse_rational("6/4"), Rational(Int(3), Int(2)));
}

TEST(ParseRational, RejectsMalformedTokensByName) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "3.5.1", "abc", "1e3", "1/-2", "."}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const InputError& e) {
      EXPECT_NE(std::string(e.what()).find(std::string("'") + bad + "'"), std::string::npos) << e.what();
    }
  }
  EXPECT_THROW(parse_int("3/1"), InputError);
  EXPECT_THROW(parse_int("4.0"), InputError);
}

TEST(RationalText, SerializesLowestTerms) {
  EXPECT_EQ(to_string(Rational(Int(10), Int(4))), "5/2");
  EXPECT_EQ(to_string(Rational(Int(-8), Int(4))), "-2");
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> num(-500, 500), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    const Rational x(Int(num(rng)), Int(den(rng)));
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}
