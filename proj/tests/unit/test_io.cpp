#include <gtest/gtest.h>

#include <sstream>

#include "oksphere/criticality.hpp"
#include "oksphere/error.hpp"
#include "oksphere/io.hpp"

using namespace oksphere;

TEST(Io, PatternJsonRoundTripIsExact) {
  const auto p = AxisymPattern::make({-0.8123456789012345, 0.1, 0.7000000000000001});
  const auto text = pattern_to_json(p).dump();
  const auto q = pattern_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(p, q);
  EXPECT_EQ(pattern_from_string(text), p);
}

TEST(Io, JsonMassMustAgree) {
  EXPECT_THROW(pattern_from_string(R"({"z": [0.2], "m": 0.5})"), Error);
  EXPECT_EQ(pattern_from_string(R"({"z": [0.2]})").size(), 1u);
}

TEST(Io, ParseList) {
  const auto v = parse_list("-0.5, 0.25,1e-3");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], -0.5);
  EXPECT_EQ(v[2], 1e-3);
  EXPECT_THROW(parse_list("0.1,abc"), Error);
}

TEST(Io, CsvWriter) {
  std::ostringstream out;
  {
    CsvWriter csv(out, {"a", "b"}, "note");
    csv.row({1.0, 0.1});
    EXPECT_THROW(csv.row({1.0}), Error);
  }
  EXPECT_EQ(out.str(), "# note\na,b\n1,0.1\n");
}

TEST(Io, CatalogRecord) {
  const auto c = solve_critical(3, 2.0, uniform_pattern(3));
  const auto j = catalog_record(c);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("z").size(), 3u);
  EXPECT_TRUE(j.contains("lambda"));
}
