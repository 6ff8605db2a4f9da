#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "wifiplan/contraction.hpp"
#include "wifiplan/optimizers.hpp"
#include "wifiplan/radio.hpp"
#include "wifiplan/rng.hpp"
#include "wifiplan/scenario_gen.hpp"

using namespace wifiplan;

namespace {

constexpr double pos_inf = std::numeric_limits<double>::infinity();

// One device w served by a, plus a co-channel interfering access point b at
// a chosen distance from w. SINR_w = 40*log10(d_interferer / 10).
Scenario one_interferer_scenario(double interferer_distance) {
  auto s = testutil::make_scenario({{"a", 110, 5}, {"b", 100 - interferer_distance, 5}},
                                   {{"w", 100, 5}}, {0, 150, 0}, 200, 10);
  s.radio.tx_height_m = 1.0;
  s.radio.rx_height_m = 1.0;
  return s;
}

}  // namespace

TEST_CASE("path loss formula") {
  CHECK(path_loss_db(1, 1, 1) == doctest::Approx(7.6).epsilon(1e-12));
  CHECK(path_loss_db(10, 1, 1) == doctest::Approx(47.6).epsilon(1e-12));
  CHECK(path_loss_db(100, 2, 0.5) == doctest::Approx(87.6).epsilon(1e-12));
  CHECK_THROWS_AS(path_loss_db(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(-1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(1, 1, -2), std::domain_error);
}

TEST_CASE("edge interference formula") {
  const auto w = default_interference_matrix(11);
  RadioParams p;
  p.tx_power_dbm = 20;
  p.tx_gain_db = p.rx_gain_db = p.obstacle_loss_db = p.activity_index_db = 0;
  p.tx_height_m = p.rx_height_m = 1.0;

  const auto co = edge_interference_dbm(3, 3, 10, p, w);
  REQUIRE(co.has_value());
  CHECK(*co == doctest::Approx(-27.6).epsilon(1e-12));

  // Zero spectral overlap contributes nothing at all.
  CHECK_FALSE(edge_interference_dbm(1, 7, 10, p, w).has_value());

  const auto adjacent = edge_interference_dbm(1, 2, 10, p, w);
  REQUIRE(adjacent.has_value());
  const double oracle = -27.6 + 10.0 * std::log10(testutil::mask_overlap_fraction(1, 2));
  CHECK(*adjacent == doctest::Approx(oracle).epsilon(1e-12));

  CHECK_THROWS_AS(edge_interference_dbm(1, 1, 0, p, w), std::domain_error);
}

TEST_CASE("a vertex with no interference has infinite sinr and utility one") {
  const auto s = testutil::make_scenario({{"a", 0, 0}}, {{"w", 1, 0}}, {0, 0, 0}, 10, 10);
  const auto g = build_graph(s);
  const auto w = default_interference_matrix(s.spectrum_size);
  const Coloring c = {{"a", 1}};

  CHECK(sinr_db({NodeKind::wd, "w"}, g, c, s.radio, w) == pos_inf);
  const auto report = detailed_utility(g, c, s.radio, w);
  CHECK(report.per_vertex.at("wd:w") == 1.0);
  CHECK(report.per_vertex.at("ap:a") == 1.0);
  CHECK(report.total == 2.0);
  CHECK(report.mean == 1.0);
}

TEST_CASE("equal-distance co-channel interferer gives exactly 0 dB") {
  const auto s = one_interferer_scenario(10.0);
  const auto g = build_graph(s);
  const auto w = default_interference_matrix(s.spectrum_size);
  const Coloring c = {{"a", 1}, {"b", 1}};
  CHECK(sinr_db({NodeKind::wd, "w"}, g, c, s.radio, w) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("two equal interferers cost exactly 10*log10(2) versus one") {
  // Interferers b and c both 10 m from w, same channel as a.
  auto s = testutil::make_scenario({{"a", 110, 5}, {"b", 90, 5}, {"c", 100, 15}},
                                   {{"w", 100, 5}}, {0, 15, 0}, 200, 20);
  s.radio.tx_height_m = s.radio.rx_height_m = 1.0;
  const auto g = build_graph(s);
  const auto w = default_interference_matrix(s.spectrum_size);

  const double two = sinr_db({NodeKind::wd, "w"}, g, {{"a", 1}, {"b", 1}, {"c", 1}}, s.radio, w);
  CHECK(two == doctest::Approx(-10.0 * std::log10(2.0)).epsilon(1e-12));

  // Silence c by moving it to a non-overlapping channel: back to one
  // interferer, exactly 10*log10(2) better.
  const double one = sinr_db({NodeKind::wd, "w"}, g, {{"a", 1}, {"b", 1}, {"c", 7}}, s.radio, w);
  CHECK(one - two == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-9));
}

TEST_CASE("utility normalization hits 0, 0.5 and 1 at the thresholds") {
  const auto w = default_interference_matrix(11);
  const Coloring c = {{"a", 1}, {"b", 1}};

  // sinr_min (0 dB): equal distances.
  auto at_min = one_interferer_scenario(10.0);
  auto report = detailed_utility(build_graph(at_min), c, at_min.radio, w);
  CHECK(report.per_vertex.at("wd:w") == doctest::Approx(0.0).epsilon(1e-12));

  // Midpoint (15 dB for the default 0..30 range).
  auto at_mid = one_interferer_scenario(10.0 * std::pow(10.0, 15.0 / 40.0));
  report = detailed_utility(build_graph(at_mid), c, at_mid.radio, w);
  CHECK(report.per_vertex.at("wd:w") == doctest::Approx(0.5).epsilon(1e-9));

  // sinr_max (30 dB).
  auto at_max = one_interferer_scenario(10.0 * std::pow(10.0, 30.0 / 40.0));
  report = detailed_utility(build_graph(at_max), c, at_max.radio, w);
  CHECK(report.per_vertex.at("wd:w") == doctest::Approx(1.0).epsilon(1e-9));

  // Beyond the thresholds the utility clamps.
  auto beyond = one_interferer_scenario(95.0);
  report = detailed_utility(build_graph(beyond), c, beyond.radio, w);
  CHECK(report.per_vertex.at("wd:w") == 1.0);
  auto below = one_interferer_scenario(10.0);
  below.radio.sinr_min_db = 5.0;  // sinr 0 dB now sits below the floor
  report = detailed_utility(build_graph(below), c, below.radio, w);
  CHECK(report.per_vertex.at("wd:w") == 0.0);
}

TEST_CASE("an access point with no devices has utility one") {
  const auto s = one_interferer_scenario(20.0);
  const auto report = detailed_utility(build_graph(s), {{"a", 1}, {"b", 1}}, s.radio,
                                       default_interference_matrix(11));
  CHECK(report.per_vertex.at("ap:b") == 1.0);
}

TEST_CASE("per-vertex utilities stay in [0,1] on random scenarios") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomScenarioSpec spec;
    spec.n_aps = 5;
    spec.n_wds = 25;
    spec.rng_seed = seed;
    const auto s = gen_random_scenario(spec);
    const auto g = build_graph(s);
    const auto w = default_interference_matrix(s.spectrum_size);
    const DetailedEvaluator eval(g, s.radio, w);
    for (std::uint64_t cs = 0; cs < 20; ++cs) {
      const auto channels =
          random_channels(g.ap_ids.size(), s.spectrum_size, derive_seed(seed, cs));
      const auto report = eval.report(channels);
      for (const auto& [id, u] : report.per_vertex) {
        CHECK(u >= 0.0);
        CHECK(u <= 1.0);
      }
      CHECK(report.total == doctest::Approx(eval.evaluate_total(channels)).epsilon(1e-12));
    }
  }
}

TEST_CASE("raising a channel pair's overlap never raises any sinr") {
  RandomScenarioSpec spec;
  spec.n_aps = 6;
  spec.n_wds = 24;
  spec.rng_seed = 99;
  const auto s = gen_random_scenario(spec);
  const auto g = build_graph(s);

  const auto base = default_interference_matrix(s.spectrum_size);
  // More overlap between channels 1 and 2: -1.12 dB -> 0 dB.
  std::vector<std::vector<double>> rows(11, std::vector<double>(11));
  for (int i = 1; i <= 11; ++i) {
    for (int j = 1; j <= 11; ++j) rows[i - 1][j - 1] = base.db(i, j);
  }
  rows[0][1] = rows[1][0] = 0.0;
  const auto bumped = InterferenceMatrix::from_rows(rows);

  const DetailedEvaluator eval_base(g, s.radio, base);
  const DetailedEvaluator eval_bumped(g, s.radio, bumped);
  for (std::uint64_t cs = 0; cs < 10; ++cs) {
    const auto channels = random_channels(g.ap_ids.size(), 11, derive_seed(7, cs));
    const auto a = eval_base.sinr_db(channels);
    const auto b = eval_bumped.sinr_db(channels);
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (a[v] == pos_inf) {
        CHECK(b[v] <= a[v]);
      } else {
        CHECK(b[v] <= a[v] + 1e-12);
      }
    }
  }
}

TEST_CASE("detailed utility total is invariant under vertex relabeling") {
  RandomScenarioSpec spec;
  spec.n_aps = 5;
  spec.n_wds = 20;
  spec.rng_seed = 3;
  Scenario s = gen_random_scenario(spec);

  Scenario relabeled = s;
  Coloring coloring;
  Coloring relabeled_coloring;
  for (std::size_t i = 0; i < s.aps.size(); ++i) {
    relabeled.aps[i].id = "station_" + std::to_string(9 - i);
    const int channel = 1 + static_cast<int>(i) % 11;
    coloring[s.aps[i].id] = channel;
    relabeled_coloring[relabeled.aps[i].id] = channel;
  }
  for (std::size_t i = 0; i < s.wds.size(); ++i) {
    relabeled.wds[i].id = "client_" + std::to_string(99 - i);
  }

  const auto w = default_interference_matrix(11);
  const auto a = detailed_utility(build_graph(s), coloring, s.radio, w);
  const auto b = detailed_utility(build_graph(relabeled), relabeled_coloring, relabeled.radio, w);
  CHECK(a.total == doctest::Approx(b.total).epsilon(1e-9));
}

TEST_CASE("simplified utility of a weight-3 edge") {
  const auto g = build_graph(testutil::two_group_toy());
  const auto cg = contract(g, ContractionMode::weighted);
  const auto w = default_interference_matrix(11);

  // Same channel: each endpoint sees the full weight.
  auto u = simplified_utility(cg, {{"a", 4}, {"b", 4}}, w);
  CHECK(u.per_vertex.at("a") == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(u.per_vertex.at("b") == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(u.total == doctest::Approx(6.0).epsilon(1e-12));

  // Non-overlapping channels: zero everywhere.
  u = simplified_utility(cg, {{"a", 1}, {"b", 6}}, w);
  CHECK(u.total == 0.0);
}

TEST_CASE("simplified utility scales the mask overlap by the weight") {
  const auto s = testutil::make_scenario({{"a", 0, 0}, {"b", 20, 0}, {"c", 90, 90}},
                                         {{"wb", 20, 1}}, {20, 21, 0});
  const auto cg = contract(build_graph(s), ContractionMode::weighted);
  REQUIRE(cg.edges.size() == 1);
  REQUIRE(cg.edges[0].weight == 2);

  const auto w = default_interference_matrix(11);
  const auto u = simplified_utility(cg, {{"a", 1}, {"b", 2}, {"c", 1}}, w);
  const double oracle = 2.0 * testutil::mask_overlap_fraction(1, 2);
  CHECK(u.per_vertex.at("a") == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(u.per_vertex.at("b") == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(u.per_vertex.at("c") == 0.0);
}

TEST_CASE("weighted contraction total equals the geometry-stripped edge sum") {
  for (std::uint64_t seed = 11; seed <= 16; ++seed) {
    RandomScenarioSpec spec;
    spec.n_aps = 5;
    spec.n_wds = 25;
    spec.interference_radii = {45, 35, 25};
    spec.rng_seed = seed;
    const auto s = gen_random_scenario(spec);
    const auto g = build_graph(s);
    const auto w = default_interference_matrix(s.spectrum_size);
    const auto assoc = g.association_map();
    const Coloring coloring = random_coloring(g.ap_ids, s.spectrum_size, seed);

    // Oracle: walk the uncontracted interference edges, dropping every
    // geometric term, and count each edge from both endpoints.
    double stripped = 0.0;
    for (const auto& e : g.interference_edges) {
      const std::string& ap_u = e.u.kind == NodeKind::ap ? e.u.id : assoc.at(e.u.id);
      const std::string& ap_v = e.v.kind == NodeKind::ap ? e.v.id : assoc.at(e.v.id);
      stripped += 2.0 * w.overlap_linear(coloring.at(ap_u), coloring.at(ap_v));
    }

    const auto cg = contract(g, ContractionMode::weighted);
    const auto u = simplified_utility(cg, coloring, w);
    CHECK(u.total == doctest::Approx(stripped).epsilon(1e-9));
  }
}

TEST_CASE("utility reports serialize to json") {
  const auto s = testutil::make_scenario({{"a", 0, 0}}, {{"w", 1, 0}}, {0, 0, 0}, 10, 10);
  const auto report = detailed_utility(build_graph(s), {{"a", 1}}, s.radio,
                                       default_interference_matrix(11));
  const auto j = nlohmann::json::parse(utility_report_to_json(report));
  CHECK(j.at("total").get<double>() == 2.0);
  CHECK(j.at("mean").get<double>() == 1.0);
  CHECK(j.at("per_vertex").at("ap:a").get<double>() == 1.0);
  CHECK(j.at("per_vertex").at("wd:w").get<double>() == 1.0);
}

TEST_CASE("evaluator rejects non-total colorings and counts evaluations") {
  const auto g = build_graph(testutil::two_group_toy());
  const auto w = default_interference_matrix(11);
  const DetailedEvaluator eval(g, RadioParams{}, w);

  CHECK_THROWS_AS(eval.from_coloring({{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(eval.from_coloring({{"a", 1}, {"b", 12}}), std::invalid_argument);

  CHECK(eval.evaluation_count() == 0);
  const std::vector<int> channels = {1, 6};
  eval.evaluate_total(channels);
  eval.evaluate_total(channels);
  CHECK(eval.evaluation_count() == 2);
}
