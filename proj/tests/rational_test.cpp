#include <gtest/gtest.h>

#include <random>

#include "henon/rational.hpp"
#include "support.hpp"

using namespace henon;
using henon::testing::frac;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("6/4"), frac(3, 2));
  EXPECT_EQ(parse_rational(" -12 "), Rational(-12));
  EXPECT_EQ(parse_rational("-0.3"), frac(-3, 10));
  EXPECT_EQ(parse_rational("+.5"), frac(1, 2));
  EXPECT_EQ(parse_rational("3/-6"), frac(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
}

TEST(Rational, LowestTermsAndPositiveDenominator) {
  Rational r = parse_rational("10/-4");
  EXPECT_EQ(r.get_num(), -5);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-5/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
}

TEST(Rational, Valuations) {
  EXPECT_EQ(valuation(frac(1, 3), 3), -1);
  EXPECT_EQ(valuation(frac(18, 5), 3), 2);
  EXPECT_EQ(valuation(frac(18, 5), 5), -1);
  EXPECT_EQ(valuation(Rational(0), 7), kInfiniteValuation);
  EXPECT_TRUE(is_p_integral(frac(1, 2), 3));
  EXPECT_FALSE(is_p_integral(frac(1, 6), 3));
  EXPECT_EQ(naive_height(frac(-7, 3)), 7);
}

TEST(Rational, PrimeDivisorsMatchTrialDivision) {
  // Oracle: naive trial division over all candidates.
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    unsigned long n = 2 + rng() % 2000000;
    std::vector<Integer> expect;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        expect.emplace_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) expect.emplace_back(m);
    EXPECT_EQ(prime_divisors(Integer(n)), expect) << n;
  }
  // A semiprime beyond trial division: Pollard-Brent.
  Integer big = Integer("1000000007") * Integer("998244353");
  EXPECT_EQ(prime_divisors(big), (std::vector<Integer>{Integer("998244353"), Integer("1000000007")}));
}

TEST(Rational, ReduceAndReconstructRoundTrip) {
  const Integer m = Integer(101) * 101 * 101 * 101 * 101;  // 2 * 100^2 < m
  for (long a = -100; a <= 100; a += 7)
    for (long b = 1; b <= 100; b += 9) {
      if (b % 101 == 0) continue;
      Rational r(a, b);
      r.canonicalize();
      auto u = reduce_mod(r, m);
      ASSERT_TRUE(u.has_value());
      auto back = rational_reconstruct(*u, m, 100, 100);
      ASSERT_TRUE(back.has_value()) << to_string(r);
      EXPECT_EQ(*back, r);
    }
  EXPECT_FALSE(reduce_mod(frac(1, 101), m).has_value());
}
