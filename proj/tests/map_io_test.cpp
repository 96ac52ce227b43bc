#include <gtest/gtest.h>

#include "henon/map_io.hpp"
#include "support.hpp"

using namespace henon;
using namespace henon::testing;

TEST(MapIO, ParsesMapsWithStringsAndNumbers) {
  HenonMap f = parse_map(R"({"factors": [{"poly": ["1/2", 0, 1], "delta": "1/2"}]})");
  EXPECT_EQ(f, half_map());
  HenonMap g = parse_map(to_json(f).dump());
  EXPECT_EQ(g, f);
}

TEST(MapIO, LinePreciseErrors) {
  const std::string text =
      "{\n"
      "  \"factors\": [\n"
      "    {\"poly\": [\"1\", \"0\", \"1\"],\n"
      "     \"delta\": \"0\"}\n"
      "  ]\n"
      "}\n";
  try {
    parse_map(text);
    FAIL() << "expected SpecError";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.field(), "factors[0].delta");
  }
  const std::string low =
      "{\"factors\": [\n"
      "  {\"poly\": [\"1\", \"1\"], \"delta\": \"1\"}\n"
      "]}\n";
  try {
    parse_map(low);
    FAIL() << "expected SpecError";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.field(), "factors[0].poly");
  }
  EXPECT_THROW(parse_map("{\"factors\": [}"), SpecError);
  EXPECT_THROW(parse_map("{}"), SpecError);
  EXPECT_THROW(parse_map(R"({"factors": [{"poly": ["a", 0, 1], "delta": "1"}]})"), SpecError);
}

TEST(MapIO, FamiliesRoundTrip) {
  HenonFamily F = intro_g();
  HenonFamily again = parse_family(to_json(F).dump());
  EXPECT_EQ(again.hash(), F.hash());
  EXPECT_THROW(parse_family(R"({"factors": [{"poly": [["0"], ["1"]], "delta": ["1"]}]})"), SpecError);
  EXPECT_THROW(parse_family(R"({"factors": [{"poly": [["0"], ["0"], ["1"]], "delta": ["0"]}]})"), SpecError);
}

TEST(MapIO, Points) {
  EXPECT_EQ(parse_exact_point("1/2, -3"), (ExactPoint{frac(1, 2), -3}));
  EXPECT_THROW(parse_exact_point("1/2"), std::invalid_argument);
  NumericPoint p = parse_numeric_point("1.5+2i,-3i");
  EXPECT_EQ(p.x, Complex(1.5, 2));
  EXPECT_EQ(p.y, Complex(0, -3));
  EXPECT_EQ(parse_complex("-2.5"), Complex(-2.5, 0));
}
