#include <gtest/gtest.h>

#include <set>

#include "henon/arch_green.hpp"
#include "henon/heights.hpp"
#include "henon/periodic.hpp"
#include "support.hpp"

using namespace henon;
using namespace henon::testing;

TEST(ModP, PermutationInvariant) {
  const std::vector<HenonMap> maps{half_map(), dissipative_map(), load_map(data_path("maps/composite.json"))};
  for (const auto& f : maps)
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
      ModPCycleSet s = periodic_modp(f, p);
      if (!s.good_reduction) continue;
      EXPECT_EQ(s.total_length(), static_cast<long>(p * p)) << f.canonical_string() << " p=" << p;
    }
  EXPECT_EQ(periodic_modp(conservative_map(), 2).total_length(), 4);
}

TEST(ModP, FixedPointsOfHalfMapModFive) {
  ModPCycleSet s = periodic_modp(half_map(), 5);
  std::set<std::pair<unsigned, unsigned>> fixed;
  for (const auto& c : s.cycles)
    if (c.length() == 1) fixed.insert({c.points[0].x, c.points[0].y});
  // Oracle: y^2 + y + 3 = 0 mod 5 by exhaustion.
  std::set<std::pair<unsigned, unsigned>> expect;
  for (unsigned y = 0; y < 5; ++y)
    if ((y * y + y + 3) % 5 == 0) expect.insert({y, y});
  EXPECT_EQ(fixed, expect);
  EXPECT_EQ(fixed, (std::set<std::pair<unsigned, unsigned>>{{1, 1}, {3, 3}}));
}

TEST(ModP, CyclesAreOrbits) {
  HenonMap f = dissipative_map();
  ReducedMap g(f, 7);
  for (const auto& c : periodic_modp(f, 7).cycles)
    for (int i = 0; i < c.length(); ++i)
      EXPECT_EQ(g(c.points[static_cast<size_t>(i)]), c.points[static_cast<size_t>((i + 1) % c.length())]);
}

TEST(ModP, BadReductionIsFlagged) {
  ModPCycleSet s = periodic_modp(half_map(), 2);
  EXPECT_FALSE(s.good_reduction);
  EXPECT_FALSE(s.defined);
  HenonMap f = quad("1", "3");
  ModPCycleSet t = periodic_modp(f, 3);
  EXPECT_FALSE(t.good_reduction);
  EXPECT_TRUE(t.defined);
  EXPECT_LT(t.total_length(), 9);
}

TEST(Hensel, LiftsFixedPointsModFive) {
  HenonMap f = half_map();
  ModPCycleSet s = periodic_modp(f, 5);
  std::set<ExactPoint> lifted;
  for (const auto& c : s.cycles) {
    if (c.length() != 1) continue;
    LiftReport r = hensel_lift(f, 5, c);
    for (const auto& q : r.points) lifted.insert(q);
  }
  EXPECT_EQ(lifted, (std::set<ExactPoint>{{1, 1}, {frac(1, 2), frac(1, 2)}}));
}

TEST(Hensel, ReconstructionFailureMatchesExhaustiveSearch) {
  // Generic map: lift every 5-cycle mod 5 with height bound 10, then confirm by
  // exhaustive search that there is no rational period-5 point of height <= 10.
  HenonMap f = quad("2/3", "5/7", "1");
  ModPCycleSet s = periodic_modp(f, 11);
  int lifted = 0;
  for (const auto& c : s.cycles) {
    if (c.length() != 5) continue;
    LiftReport r = hensel_lift(f, 11, c, LiftOptions{10, 0});
    lifted += static_cast<int>(r.points.size());
  }
  int brute = 0;
  std::set<Rational> values;
  for (long b = 1; b <= 10; ++b)
    for (long a = -10; a <= 10; ++a) {
      values.insert(frac(a, b));
    }
  for (const auto& x : values)
    for (const auto& y : values)
      if (exact_period(f, ExactPoint{x, y}, 5) == 5) ++brute;
  EXPECT_EQ(lifted, brute);
}

TEST(RationalPeriodic, TwoPrimesAndCrossModuleConsistency) {
  HenonMap f = half_map();
  RationalPeriodicReport r = rational_periodic_points(f, 4);
  ASSERT_EQ(r.points.size(), 2u);
  EXPECT_EQ(r.primes_used, (std::vector<unsigned long>{101, 103}));
  GreenFunction G(f);
  for (const auto& p : r.points) {
    EXPECT_EQ(exact_period(f, p.point, 4), p.period);
    EXPECT_TRUE(is_periodic_by_height(f, p.point, 1e-6));
    EXPECT_LE(G.total(to_numeric(p.point)).value, 1e-4);
  }
  // A bad prime is replaced by the next one.
  RationalPeriodicReport s = rational_periodic_points(f, 1, {2, 101});
  EXPECT_EQ(s.primes_skipped, (std::vector<unsigned long>{2}));
  EXPECT_EQ(s.primes_used.size(), 2u);
}

TEST(Numeric, FixedPointsOfDissipativeMap) {
  NumericPeriodicReport r = periodic_numeric(quad("-1", "0.3"), 1, 1e-10, 32, 7);
  ASSERT_EQ(r.cycles.size(), 2u);
  // Oracle: roots of y^2 - 1.3 y - 1 = 0.
  const double s = std::sqrt(1.69 + 4.0);
  std::vector<double> expect{(1.3 - s) / 2, (1.3 + s) / 2};
  EXPECT_NEAR(r.cycles[0].points[0].y.real(), expect[0], 1e-10);
  EXPECT_NEAR(r.cycles[1].points[0].y.real(), expect[1], 1e-10);
  EXPECT_NEAR(r.cycles[1].points[0].y.real(), 1.8427, 1e-4);
  EXPECT_NEAR(r.cycles[0].points[0].y.real(), -0.5427, 1e-4);
  EXPECT_DOUBLE_EQ(r.coverage, 1.0);
}

TEST(Numeric, CountsMatchResultantAndDeterminantIdentity) {
  HenonMap f = quad("-7/5", "3/10", "1/7");
  for (int n = 1; n <= 3; ++n) {
    ResultantFixedPoints res = fixed_points_exact_resultant(f, n);
    EXPECT_EQ(res.count, 1 << n);
    NumericPeriodicReport r = periodic_numeric(f, n, 1e-10, 64 * n, 99);
    long points = 0;
    for (const auto& c : r.cycles) {
      points += c.period;
      // |det Df^m| = |Jac|^m, so the multiplier moduli multiply to 0.3^m.
      EXPECT_NEAR(c.multiplier_small * c.multiplier_large, std::pow(0.3, c.period), 1e-8 * std::pow(0.3, c.period) + 1e-12);
      EXPECT_LE(c.residual, 1e-10);
    }
    EXPECT_EQ(points, res.count) << "n=" << n;
  }
}

TEST(Numeric, AttractingCyclesAreDissipative) {
  HenonMap f = quad("-1", "3/10");
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : periodic_numeric(f, n, 1e-10, 64, 3).cycles)
      if (c.kind == CycleKind::attracting) EXPECT_LT(c.multiplier_small * c.multiplier_large, 1.0);
}

TEST(Numeric, DeterministicForAFixedSeed) {
  HenonMap f = dissipative_map();
  NumericOptions one, many;
  one.threads = 1;
  many.threads = 8;
  NumericPeriodicReport a = periodic_numeric(f, 4, 1e-9, 200, 5, one), b = periodic_numeric(f, 4, 1e-9, 200, 5, many);
  ASSERT_EQ(a.cycles.size(), b.cycles.size());
  for (size_t i = 0; i < a.cycles.size(); ++i) {
    EXPECT_EQ(a.cycles[i].points[0].x, b.cycles[i].points[0].x);
    EXPECT_EQ(a.cycles[i].points[0].y, b.cycles[i].points[0].y);
  }
}

TEST(Resultant, IntroFixedPoints) {
  HenonMap f0 = quad("0", "1/2");
  ResultantFixedPoints r = fixed_points_exact_resultant(f0, 1);
  EXPECT_EQ(r.count, 2);
  EXPECT_EQ(r.rational, (std::vector<ExactPoint>{{0, 0}, {frac(3, 2), frac(3, 2)}}));
  EXPECT_EQ(fixed_points_exact_resultant(half_map(), 2).count, 4);
  EXPECT_THROW(fixed_points_exact_resultant(f0, 4), ComputationRefused);
  EXPECT_THROW(fixed_points_exact_resultant(f0, 3, ExpansionLimits{4}), ComputationRefused);
}

TEST(Resultant, SylvesterOracle) {
  // Res_x(x - y, x^2 - 2) = y^2 - 2 up to sign, checked at sample points.
  std::vector<UniPoly> a{UniPoly({Rational(0), Rational(-1)}), UniPoly::constant(1)};
  std::vector<UniPoly> b{UniPoly::constant(-2), UniPoly(), UniPoly::constant(1)};
  UniPoly r = resultant_x(a, b);
  EXPECT_EQ(r, UniPoly({Rational(-2), Rational(0), Rational(1)}));
}

TEST(Common, IntroExamples) {
  HenonFamily F = intro_f(), G = intro_g();
  CommonPeriodicReport r = common_periodic(F.specialize(frac(-5, 2)), G.specialize(frac(-5, 2)), 1);
  ASSERT_EQ(r.points.size(), 1u);
  ASSERT_TRUE(r.points[0].exact.has_value());
  EXPECT_EQ(*r.points[0].exact, (ExactPoint{-1, -1}));
  EXPECT_EQ(r.points[0].method, "exact+numeric");
  CommonPeriodicReport z = common_periodic(F.specialize(Rational(0)), G.specialize(Rational(0)), 2);
  ASSERT_TRUE(z.shared_iterate.has_value());
  EXPECT_TRUE(z.points.empty());
  CommonPeriodicReport one = common_periodic(F.specialize(Rational(1)), G.specialize(Rational(1)), 2);
  EXPECT_FALSE(one.shared_iterate.has_value());
  EXPECT_TRUE(one.points.empty());
}

TEST(Common, FixedPointAlgebraOracle) {
  // Common fixed points need b (1 + y) = 0; away from b = 0 only y = -1, which
  // forces b = -5/2. Check a spread of parameters with max_period 1.
  HenonFamily F = intro_f(), G = intro_g();
  for (long k = -12; k <= 12; ++k) {
    Rational b = frac(k, 4);
    if (b == 0 || b == frac(-1, 2)) continue;
    CommonOptions o;
    o.n_starts = 16;
    CommonPeriodicReport r = common_periodic(F.specialize(b), G.specialize(b), 1, o);
    EXPECT_EQ(r.points.size(), b == frac(-5, 2) ? 1u : 0u) << to_string(b);
  }
}
