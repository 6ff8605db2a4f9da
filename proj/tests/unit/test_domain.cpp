#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "wifiplan/scenario_io.hpp"
#include "wifiplan/types.hpp"

using namespace wifiplan;

namespace {

bool mentions(const std::vector<std::string>& violations, const char* needle) {
  return std::any_of(violations.begin(), violations.end(), [needle](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("validate_scenario accepts a well-formed scenario") {
  const auto s = testutil::make_scenario({{"a", 1, 1}, {"b", 9, 9}},
                                         {{"w1", 2, 2}, {"w2", 8, 8}}, {5, 4, 3}, 10, 10);
  CHECK(validate_scenario(s).empty());
}

TEST_CASE("validate_scenario reports duplicate ids") {
  auto s = testutil::make_scenario({{"a", 1, 1}, {"a", 2, 2}}, {}, {5, 4, 3}, 10, 10);
  CHECK(mentions(validate_scenario(s), "duplicate id"));
}

TEST_CASE("validate_scenario reports out-of-bounds coordinates") {
  auto s = testutil::make_scenario({{"a", 1, 1}}, {{"w", -1, 0}}, {5, 4, 3}, 10, 10);
  CHECK(mentions(validate_scenario(s), "out of bounds"));
}

TEST_CASE("validate_scenario reports devices without any access point") {
  auto s = testutil::make_scenario({}, {{"w", 1, 1}}, {5, 4, 3}, 10, 10);
  CHECK(mentions(validate_scenario(s), "no access point"));
}

TEST_CASE("validate_scenario reports bad radii, heights and thresholds") {
  auto s = testutil::make_scenario({{"a", 1, 1}}, {}, {-1, 4, 3}, 10, 10);
  s.radio.tx_height_m = 0.0;
  s.radio.sinr_min_db = 30.0;
  s.radio.sinr_max_db = 0.0;
  const auto v = validate_scenario(s);
  CHECK(mentions(v, "radius"));
  CHECK(mentions(v, "tx_height_m"));
  CHECK(mentions(v, "sinr_min_db"));
}

TEST_CASE("validate_scenario collects every violation, not just the first") {
  auto s = testutil::make_scenario({{"a", 1, 1}, {"a", 2, 2}}, {{"w", -1, 0}}, {-1, 4, 3}, 10, 10);
  CHECK(validate_scenario(s).size() >= 3);
}

TEST_CASE("coloring totality is checkable") {
  const auto s = testutil::make_scenario({{"a", 1, 1}, {"b", 2, 2}}, {}, {5, 4, 3}, 10, 10);
  CHECK(is_total_coloring(s, {{"a", 1}, {"b", 11}}));
  CHECK_FALSE(is_total_coloring(s, {{"a", 1}}));                 // missing b
  CHECK_FALSE(is_total_coloring(s, {{"a", 1}, {"b", 12}}));      // channel out of range
  CHECK_FALSE(is_total_coloring(s, {{"a", 0}, {"b", 1}}));       // channel out of range
  CHECK_FALSE(is_total_coloring(s, {{"a", 1}, {"zz", 1}}));      // unknown id
}

TEST_CASE("scenario json round trip preserves every field") {
  auto s = testutil::make_scenario({{"a", 1.25, 1.5}}, {{"w", 2.75, 3.5}}, {5.5, 4.25, 3.125},
                                   12.5, 10.25);
  s.radio.tx_power_dbm = 18.0;
  s.radio.activity_index_db = -3.0;
  s.spectrum_size = 13;

  const Scenario back = scenario_from_json(scenario_to_json(s));
  CHECK(back.width_m == s.width_m);
  CHECK(back.height_m == s.height_m);
  CHECK(back.spectrum_size == 13);
  CHECK(back.radio.tx_power_dbm == 18.0);
  CHECK(back.radio.activity_index_db == -3.0);
  REQUIRE(back.aps.size() == 1);
  CHECK(back.aps[0].id == "a");
  CHECK(back.aps[0].x == 1.25);
  REQUIRE(back.wds.size() == 1);
  CHECK(back.wds[0].y == 3.5);
  CHECK(back.interference_radii.wd_wd == 3.125);

  // Serialization is deterministic.
  CHECK(scenario_to_json(back) == scenario_to_json(s));
}

TEST_CASE("scenario json rejects unknown format versions") {
  CHECK_THROWS(scenario_from_json("{\"format\": 2}"));
  CHECK_THROWS(scenario_from_json("{}"));
}
