#include <gtest/gtest.h>

#include "henon/report.hpp"
#include "henon/sweep.hpp"
#include "support.hpp"

using namespace henon;
using namespace henon::testing;

TEST(Params, RangesAndLists) {
  auto r = parse_params("-3:3:1/4");
  EXPECT_EQ(r.size(), 25u);
  EXPECT_EQ(r.front(), Rational(-3));
  EXPECT_EQ(r.back(), Rational(3));
  EXPECT_EQ(parse_params("1/2,0,-1"), (std::vector<Rational>{frac(1, 2), 0, -1}));
  EXPECT_THROW(parse_params("0:1:0"), std::invalid_argument);
  EXPECT_THROW(parse_params("0:1"), std::invalid_argument);
}

TEST(Sweep, IntroPairQuarterGrid) {
  SweepReport r = sweep_common_periodic(intro_f(), intro_g(), parse_params("-3:3:1/4"), 2, 1e-6, 11);
  ASSERT_EQ(r.entries.size(), 25u);
  EXPECT_EQ(r.d_observed, 1);
  for (const auto& e : r.entries) {
    if (e.parameter == 0) {
      EXPECT_TRUE(e.shared_iterate.has_value());
    } else if (e.parameter == frac(-1, 2)) {
      EXPECT_EQ(e.status, SweepStatus::excluded);
    } else {
      EXPECT_EQ(e.status, SweepStatus::ok) << to_string(e.parameter) << ": " << e.message;
      EXPECT_FALSE(e.shared_iterate.has_value()) << to_string(e.parameter);
      EXPECT_EQ(e.count, e.parameter == frac(-5, 2) ? 1 : 0) << to_string(e.parameter);
    }
  }
  EXPECT_EQ(r.exceptional, (std::vector<Rational>{frac(-1, 2), 0}));
}

TEST(Sweep, SameFamilyIsAlwaysShared) {
  SweepReport r = sweep_common_periodic(intro_f(), intro_f(), parse_params("-1:1:1/2"), 1, 1e-6, 3);
  for (const auto& e : r.entries) {
    ASSERT_TRUE(e.shared_iterate.has_value());
    EXPECT_EQ(*e.shared_iterate, (IteratePair{1, 1}));
  }
  EXPECT_EQ(r.d_observed, 0);
}

TEST(Sweep, EmptyParameterList) {
  SweepReport r = sweep_common_periodic(intro_f(), intro_g(), {}, 2, 1e-6, 3);
  EXPECT_TRUE(r.entries.empty());
  EXPECT_EQ(r.d_observed, 0);
}

TEST(Sweep, InvariantUnderPermutationAndThreads) {
  std::vector<Rational> params = parse_params("-3:1:1/2");
  std::vector<Rational> shuffled(params.rbegin(), params.rend());
  SweepOptions one, many;
  one.threads = 1;
  many.threads = 6;
  auto a = report::sweep(sweep_common_periodic(intro_f(), intro_g(), params, 2, 1e-6, 21, one)).dump();
  auto b = report::sweep(sweep_common_periodic(intro_f(), intro_g(), shuffled, 2, 1e-6, 21, many)).dump();
  EXPECT_EQ(a, b);
}

TEST(Sweep, FailuresAreRecorded) {
  // eps below the height error of any reported point cannot be honoured; a
  // huge Newton budget is not needed to provoke it, only a nonzero error.
  SweepOptions o;
  o.height_tol = 1e-8;
  SweepReport r = sweep_common_periodic(intro_f(), intro_g(), {frac(-5, 2)}, 1, 1e-300, 3, o);
  ASSERT_EQ(r.entries.size(), 1u);
  // The common point (-1, -1) has exact height 0 with zero error, so it still passes.
  EXPECT_EQ(r.entries[0].status, SweepStatus::ok);
  EXPECT_EQ(r.entries[0].count, 1);
}

TEST(Sweep, Csv) {
  SweepReport r = sweep_common_periodic(intro_f(), intro_g(), {frac(-5, 2), Rational(0)}, 1, 1e-6, 3);
  std::string csv = sweep_csv(r);
  EXPECT_EQ(csv, "b,status,count,shared_iterate,max_pair_height\n-5/2,ok,1,,0\n0,ok,0,1/1,0\n");
}
