#include <gtest/gtest.h>

#include "henon/exact_roots.hpp"
#include "support.hpp"

using namespace henon;
using henon::testing::frac;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  UniPoly p = UniPoly::constant(lead);
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

}  // namespace

TEST(ExactRoots, RecoversKnownRoots) {
  std::vector<Rational> roots{frac(-3, 2), Rational(0), frac(2, 7), Rational(5)};
  UniPoly p = from_roots(roots, frac(6, 5)) * UniPoly({Rational(1), Rational(0), Rational(1)});  // times x^2+1
  EXPECT_EQ(rational_roots(p), roots);
}

TEST(ExactRoots, MultiplicityAndSquarefree) {
  UniPoly p = from_roots({frac(1, 2), frac(1, 2), frac(1, 2), Rational(-1)}, 3);
  EXPECT_EQ(root_multiplicity(p, frac(1, 2)), 3);
  EXPECT_EQ(root_multiplicity(p, Rational(-1)), 1);
  EXPECT_EQ(root_multiplicity(p, Rational(2)), 0);
  EXPECT_EQ(squarefree_part(p).degree(), 2);
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{Rational(-1), frac(1, 2)}));
}

TEST(ExactRoots, BruteForceOracle) {
  // p = (3t^2 - 2t - 1)(t^3 - 2) has rational roots {-1/3, 1} only; check every
  // a/b with |a|, b <= 12 directly.
  UniPoly p = UniPoly({Rational(-1), Rational(-2), Rational(3)}) * UniPoly({Rational(-2), 0, 0, Rational(1)});
  std::vector<Rational> brute;
  for (long b = 1; b <= 12; ++b)
    for (long a = -12; a <= 12; ++a) {
      Rational r(a, b);
      r.canonicalize();
      if (p(r) == 0 && (brute.empty() || brute.back() != r)) brute.push_back(r);
    }
  std::sort(brute.begin(), brute.end());
  brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
  EXPECT_EQ(rational_roots(p), brute);
}
