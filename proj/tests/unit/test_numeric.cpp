#include <gtest/gtest.h>

#include <cmath>

#include "ahull/exponent_polynomial.hpp"
#include "ahull/numeric.hpp"
#include "ahull/polynomial.hpp"

using namespace ahull;

TEST(Numeric, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("6/-4"), std::invalid_argument);
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(parse_integer("123456789012345678901234567890"), Integer("123456789012345678901234567890"));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
}

TEST(Numeric, IntegerHelpers) {
  EXPECT_EQ(ipow(Integer(3), 4), 81);
  EXPECT_EQ(isqrt(Integer(48)), 6);
  EXPECT_EQ(isqrt(Integer(49)), 7);
  EXPECT_EQ(mod(Integer(-3), Integer(7)), 4);
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(round_div(Integer(5), Integer(2)), 3);
  EXPECT_EQ(round_div(Integer(-5), Integer(2)), -2);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_NEAR(log_abs(Integer(-1000)), std::log(1000.0), 1e-12);
}

TEST(Numeric, Primes) {
  EXPECT_TRUE(is_probable_prime(2));
  EXPECT_TRUE(is_probable_prime(1000003));
  EXPECT_FALSE(is_probable_prime(1));
  EXPECT_FALSE(is_probable_prime(561));
  EXPECT_EQ(next_prime(7), 11u);
  EXPECT_EQ(next_prime(1), 2u);
}

TEST(Polynomial, ArithmeticAndDivision) {
  const RatPolynomial f({Rational(-2), Rational(0), Rational(1)});
  const RatPolynomial g({Rational(1), Rational(1)});
  const auto [q, r] = divmod(f * g + RatPolynomial{Rational(3)}, g);
  EXPECT_EQ(q, f);
  EXPECT_EQ(r, RatPolynomial{Rational(3)});
  EXPECT_EQ(gcd(f * g, g * g), g);
  EXPECT_EQ(f.derivative(), RatPolynomial({Rational(0), Rational(2)}));
  EXPECT_EQ(RatPolynomial({Rational(0), Rational(0)}).degree(), -1);
  EXPECT_THROW(to_integral(RatPolynomial({Rational(1, 2), Rational(1)})), std::domain_error);
}

TEST(ExponentPolynomial, NormalizesAndCombines) {
  const auto x1 = ExponentPolynomial::variable(2, 0);
  const auto x2 = ExponentPolynomial::variable(2, 1);
  const auto g = x1 * x2 + x2 * x1 - Integer(2) * (x1 * x2);
  EXPECT_TRUE(g.is_zero());
  const auto h = ExponentPolynomial::combination({Integer(1), Integer(-1)}, {x1, x2});
  EXPECT_EQ(h, x1 - x2);
  EXPECT_EQ((x1 * x1 * x2).total_degree(), 3u);
  EXPECT_THROW(ExponentPolynomial(2, {{Integer(1), {1, 2, 3}}}), std::invalid_argument);
}
