#include <gtest/gtest.h>

#include <random>

#include "henon/henon_map.hpp"
#include "support.hpp"

using namespace henon;
using namespace henon::testing;

TEST(HenonMap, EvaluateExamples) {
  HenonMap f = half_map();
  EXPECT_EQ(evaluate(f, ExactPoint{1, 1}), (ExactPoint{1, 1}));
  EXPECT_EQ(evaluate(f, ExactPoint{0, 0}), (ExactPoint{0, frac(1, 2)}));
  HenonMap f0 = quad("0", "1/2");
  EXPECT_EQ(evaluate(f0, ExactPoint{2, 0}), (ExactPoint{0, -1}));
}

TEST(HenonMap, InverseIsTheSolvedMap) {
  HenonMap f = half_map();
  HenonInverse g = inverse(f);
  // f^{-1}(x, y) = (2x^2 + 1 - 2y, x), evaluated directly as the oracle.
  for (auto [x, y] : std::vector<std::pair<Rational, Rational>>{{0, 0}, {1, 2}, {frac(-3, 7), frac(5, 2)}}) {
    ExactPoint expect{2 * x * x + 1 - 2 * y, x};
    EXPECT_EQ(evaluate(g, ExactPoint{x, y}), expect);
  }
  EXPECT_EQ(evaluate(g, evaluate(f, ExactPoint{0, 0})), (ExactPoint{0, 0}));
  EXPECT_EQ(g.jacobian(), Rational(2));
}

TEST(HenonMap, InverseRoundTripRandomExact) {
  std::mt19937_64 rng(5);
  HenonMap f({ElementaryHenon(UniPoly({frac(1, 3), Rational(-2), Rational(1), frac(5, 2)}), frac(-4, 9)),
              ElementaryHenon(UniPoly({Rational(0), Rational(0), frac(7, 3)}), frac(3, 2))});
  HenonInverse g = inverse(f);
  for (int k = 0; k < 50; ++k) {
    ExactPoint q{Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 13)),
                 Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 13))};
    q.x.canonicalize();
    q.y.canonicalize();
    EXPECT_EQ(evaluate(g, evaluate(f, q)), q);
    EXPECT_EQ(evaluate(f, evaluate(g, q)), q);
  }
}

TEST(HenonMap, JacobianAndDegree) {
  EXPECT_EQ(jacobian(half_map()), frac(1, 2));
  HenonMap a = quad("0", "1/2"), b = quad("1", "3");
  HenonMap ab = compose(b, a);
  EXPECT_EQ(jacobian(ab), frac(3, 2));
  EXPECT_EQ(dynamical_degree(ab), 4);
  EXPECT_EQ(dynamical_degree(a), 2);
  HenonMap cubic = HenonMap::single(UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)}), 1);
  EXPECT_EQ(dynamical_degree(cubic), 3);
  EXPECT_EQ(dynamical_degree(a.power(3)), 8);
  EXPECT_EQ(jacobian(a.power(3)), frac(1, 8));
}

TEST(HenonMap, ComposeAppliesInnerFirst) {
  HenonMap a = quad("0", "1/2"), b = quad("1", "3");
  ExactPoint q{frac(1, 3), Rational(-2)};
  EXPECT_EQ(evaluate(compose(b, a), q), evaluate(b, evaluate(a, q)));
}

TEST(HenonMap, RejectsDegenerateFactors) {
  EXPECT_THROW(ElementaryHenon(UniPoly({Rational(1), Rational(2)}), 1), std::invalid_argument);
  EXPECT_THROW(ElementaryHenon(UniPoly({Rational(0), Rational(0), Rational(1)}), 0), std::invalid_argument);
}

TEST(HenonMap, DifferentialDeterminantIsJacobian) {
  HenonMap f = compose(quad("1/3", "2"), half_map());
  NumericHenon fn = f.numeric();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 20; ++k) {
    NumericPoint q{{u(rng), u(rng)}, {u(rng), u(rng)}};
    Matrix2 D = differential(fn, q);
    Complex det = D[0][0] * D[1][1] - D[0][1] * D[1][0];
    EXPECT_NEAR(std::abs(det - f.jacobian().get_d()), 0.0, 1e-9);
    // Finite-difference oracle for the first column.
    const double h = 1e-6;
    NumericPoint a = evaluate(fn, NumericPoint{q.x + h, q.y}), b = evaluate(fn, NumericPoint{q.x - h, q.y});
    EXPECT_NEAR(std::abs((a.x - b.x) / (2 * h) - D[0][0]), 0.0, 1e-5);
    EXPECT_NEAR(std::abs((a.y - b.y) / (2 * h) - D[1][0]), 0.0, 1e-5);
  }
}

TEST(HenonMap, NumericOverflowGivesSentinel) {
  NumericPoint q = iterate(half_map().numeric(), NumericPoint{0.0, 1e6}, 40);
  EXPECT_TRUE(q.escaped());
  EXPECT_FALSE(std::isnan(q.x.real()));
}

TEST(HenonMap, NumericMatchesExact) {
  HenonMap f = half_map();
  ExactPoint q{frac(1, 3), frac(-1, 5)};
  NumericPoint n = evaluate(f, to_numeric(q));
  ExactPoint e = evaluate(f, q);
  EXPECT_NEAR(n.x.real(), e.x.get_d(), 1e-15);
  EXPECT_NEAR(n.y.real(), e.y.get_d(), 1e-15);
}

TEST(HenonMap, HashIsStableAndDiscriminating) {
  EXPECT_EQ(half_map().hash(), half_map().hash());
  EXPECT_NE(half_map().hash(), quad("1/2", "1/3").hash());
  EXPECT_EQ(half_map().hash().size(), 16u);
}
