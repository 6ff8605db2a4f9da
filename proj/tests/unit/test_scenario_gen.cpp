#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "wifiplan/scenario_gen.hpp"
#include "wifiplan/scenario_io.hpp"

using namespace wifiplan;

TEST_CASE("the bundled floorplan has 26 access points and 48 classrooms") {
  const Floorplan fp = default_floorplan();
  CHECK(fp.width_m == 130.0);
  CHECK(fp.height_m == 130.0);
  CHECK(fp.ap_positions.size() == 26);
  CHECK(fp.classrooms.size() == 48);
  CHECK(validate_floorplan(fp).empty());
}

TEST_CASE("the data directory copy matches the built-in floorplan") {
  const std::filesystem::path path =
      std::filesystem::path(WIFIPLAN_SOURCE_DIR) / "data" / "floorplan_default.json";
  REQUIRE(std::filesystem::exists(path));
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == floorplan_to_json(default_floorplan()));
}

TEST_CASE("floorplan json round trip") {
  const auto path = std::filesystem::temp_directory_path() / "wifiplan_fp_test.json";
  save_floorplan(path, default_floorplan());
  const Floorplan back = load_floorplan(path);
  CHECK(floorplan_to_json(back) == floorplan_to_json(default_floorplan()));
  std::filesystem::remove(path);
}

TEST_CASE("classroom scenario counts follow the occupancy ratio") {
  const std::map<double, int> expected = {
      {0.25, 12 * 25 + 100}, {0.5, 24 * 25 + 100}, {0.75, 36 * 25 + 100}, {1.0, 48 * 25 + 100}};
  for (const auto& [rho, wds] : expected) {
    const Scenario s = gen_classroom_scenario(ClassroomScenarioSpec::make(rho, 7));
    CHECK(static_cast<int>(s.wds.size()) == wds);
    CHECK(s.aps.size() == 26);
    CHECK(validate_scenario(s).empty());
  }
}

TEST_CASE("classroom scenarios are reproducible and stay out of the courtyard") {
  const auto spec = ClassroomScenarioSpec::make(0.5, 99);
  const Scenario a = gen_classroom_scenario(spec);
  const Scenario b = gen_classroom_scenario(spec);
  CHECK(scenario_to_json(a) == scenario_to_json(b));

  const Rect courtyard = spec.floorplan.courtyard;
  for (const Node& wd : a.wds) {
    CHECK(wd.x >= 0.0);
    CHECK(wd.x <= a.width_m);
    CHECK(wd.y >= 0.0);
    CHECK(wd.y <= a.height_m);
    CHECK_FALSE(courtyard.contains(wd.x, wd.y));
  }

  // A different seed moves the devices.
  const Scenario c = gen_classroom_scenario(ClassroomScenarioSpec::make(0.5, 100));
  CHECK(scenario_to_json(c) != scenario_to_json(a));
}

TEST_CASE("classroom scenario rejects out-of-range occupancy") {
  CHECK_THROWS_AS(gen_classroom_scenario(ClassroomScenarioSpec::make(0.0, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_classroom_scenario(ClassroomScenarioSpec::make(1.5, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_classroom_scenario(ClassroomScenarioSpec::make(-0.25, 1)),
                  std::invalid_argument);
}

TEST_CASE("random scenarios have the requested sizes and fit the rectangle") {
  RandomScenarioSpec spec;
  spec.n_aps = 15;
  spec.n_wds = 75;
  spec.rng_seed = 1;
  const Scenario s = gen_random_scenario(spec);
  CHECK(s.aps.size() == 15);
  CHECK(s.wds.size() == 75);
  CHECK(validate_scenario(s).empty());
  CHECK(scenario_to_json(s) == scenario_to_json(gen_random_scenario(spec)));

  spec.n_wds = 0;
  CHECK(gen_random_scenario(spec).wds.empty());

  spec.n_aps = 0;
  CHECK_THROWS_AS(gen_random_scenario(spec), std::invalid_argument);
}

TEST_CASE("the corpus holds 270 random plus 12 classroom scenarios") {
  const auto corpus = gen_corpus(42);
  REQUIRE(corpus.size() == 282);

  std::map<std::string, int> per_combo;
  std::set<std::string> ids;
  int classrooms = 0;
  for (const auto& item : corpus) {
    CHECK(ids.insert(item.id).second);
    if (item.family == "random") {
      ++per_combo[item.rho_or_combo];
    } else {
      CHECK(item.family == "classroom");
      ++classrooms;
    }
    CHECK(validate_scenario(item.scenario).empty());
  }
  CHECK(classrooms == 12);
  REQUIRE(per_combo.size() == 9);
  for (const auto& [combo, count] : per_combo) CHECK(count == 30);
  CHECK(per_combo.at("50x250") == 30);

  // Sizes follow the combo labels.
  CHECK(corpus[0].scenario.aps.size() == 15);
  CHECK(corpus[0].scenario.wds.size() == 15);
  const auto& last_random = corpus[269];
  CHECK(last_random.rho_or_combo == "100x1000");
  CHECK(last_random.scenario.aps.size() == 100);
  CHECK(last_random.scenario.wds.size() == 1000);
}

TEST_CASE("corpus generation is deterministic in the master seed") {
  const auto a = gen_corpus(7);
  const auto b = gen_corpus(7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i : {std::size_t{0}, std::size_t{135}, std::size_t{270}, std::size_t{281}}) {
    CHECK(a[i].id == b[i].id);
    CHECK(scenario_to_json(a[i].scenario) == scenario_to_json(b[i].scenario));
  }
  const auto c = gen_corpus(8);
  CHECK(scenario_to_json(a[0].scenario) != scenario_to_json(c[0].scenario));
}

TEST_CASE("floorplans with sites in the courtyard are rejected") {
  Floorplan fp = default_floorplan();
  fp.classrooms[0].x = 65.0;  // dead center of the courtyard
  fp.classrooms[0].y = 65.0;
  CHECK_FALSE(validate_floorplan(fp).empty());

  const auto path = std::filesystem::temp_directory_path() / "wifiplan_fp_bad.json";
  save_floorplan(path, fp);
  CHECK_THROWS_AS(load_floorplan(path), ValidationError);
  std::filesystem::remove(path);

  ClassroomScenarioSpec spec = ClassroomScenarioSpec::make(0.5, 1);
  spec.floorplan = fp;
  CHECK_THROWS_AS(gen_classroom_scenario(spec), ValidationError);
}

TEST_CASE("scenario json reports missing fields") {
  CHECK_THROWS(scenario_from_json("{\"format\": 1, \"width_m\": 10}"));
}

TEST_CASE("scenario files round-trip byte-for-byte") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    RandomScenarioSpec spec;
    spec.n_aps = 5;
    spec.n_wds = 20;
    spec.rng_seed = seed;
    const Scenario s = gen_random_scenario(spec);
    const std::string once = scenario_to_json(s);
    const std::string twice = scenario_to_json(scenario_from_json(once));
    CHECK(once == twice);
  }
}

TEST_CASE("scenario ids classify back into family and label") {
  CHECK(classify_scenario_id("random-15x75-03") ==
        std::pair<std::string, std::string>{"random", "15x75"});
  CHECK(classify_scenario_id("classroom-025-1") ==
        std::pair<std::string, std::string>{"classroom", "0.25"});
  CHECK(classify_scenario_id("classroom-100-0") ==
        std::pair<std::string, std::string>{"classroom", "1.00"});
  CHECK(classify_scenario_id("mydata") == std::pair<std::string, std::string>{"file", "-"});
}
