#include "wifiplan/scenario_gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "wifiplan/rng.hpp"

namespace wifiplan {

namespace {

std::string padded_id(const char* prefix, int index, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*d", prefix, width, index);
  return buf;
}

int id_width(int count) { return count > 1000 ? 4 : count > 100 ? 3 : 2; }

/// Point at arc length t along the rectangle inset from the building
/// outline, walked counterclockwise from the lower-left corner.
struct RingWalk {
  double min_c, max_x, max_y, side_x, side_y;

  RingWalk(double width, double height, double inset)
      : min_c(inset),
        max_x(width - inset),
        max_y(height - inset),
        side_x(width - 2 * inset),
        side_y(height - 2 * inset) {}

  double perimeter() const { return 2 * (side_x + side_y); }

  std::pair<double, double> at(double t) const {
    if (t < side_x) return {min_c + t, min_c};
    t -= side_x;
    if (t < side_y) return {max_x, min_c + t};
    t -= side_y;
    if (t < side_x) return {max_x - t, max_y};
    t -= side_x;
    return {min_c, max_y - t};
  }
};

bool inside_building(const Floorplan& fp, double x, double y) {
  return x >= 0.0 && x <= fp.width_m && y >= 0.0 && y <= fp.height_m &&
         !fp.courtyard.contains(x, y);
}

Rect rect_from_json(const nlohmann::json& j) {
  return {j.at("min_x").get<double>(), j.at("min_y").get<double>(),
          j.at("max_x").get<double>(), j.at("max_y").get<double>()};
}

}  // namespace

Floorplan default_floorplan() {
  Floorplan fp;
  fp.width_m = 130.0;
  fp.height_m = 130.0;
  fp.courtyard = {35.0, 35.0, 95.0, 95.0};

  // Classrooms and access points sit on the center line of the corridor
  // ring between the outline and the courtyard.
  const RingWalk ring(fp.width_m, fp.height_m, 17.5);
  const double perimeter = ring.perimeter();

  constexpr int n_classrooms = 48;
  for (int i = 0; i < n_classrooms; ++i) {
    const auto [x, y] = ring.at((i + 0.5) * perimeter / n_classrooms);
    fp.classrooms.push_back({padded_id("c", i, 2), x, y});
  }

  constexpr int n_aps = 26;
  for (int i = 0; i < n_aps; ++i) {
    const auto [x, y] = ring.at((i + 0.5) * perimeter / n_aps);
    fp.ap_positions.push_back({x, y});
  }
  return fp;
}

std::vector<std::string> validate_floorplan(const Floorplan& fp) {
  std::vector<std::string> v;
  if (!(fp.width_m > 0.0) || !(fp.height_m > 0.0)) {
    v.push_back("floorplan dimensions must be positive");
  }
  for (std::size_t i = 0; i < fp.ap_positions.size(); ++i) {
    if (!inside_building(fp, fp.ap_positions[i].x, fp.ap_positions[i].y)) {
      v.push_back("ap position " + std::to_string(i) + " outside building or in courtyard");
    }
  }
  for (const ClassroomSite& c : fp.classrooms) {
    if (!inside_building(fp, c.x, c.y)) {
      v.push_back("classroom '" + c.id + "' outside building or in courtyard");
    }
  }
  return v;
}

std::string floorplan_to_json(const Floorplan& fp) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["width_m"] = fp.width_m;
  j["height_m"] = fp.height_m;
  j["courtyard"] = {{"min_x", fp.courtyard.min_x},
                    {"min_y", fp.courtyard.min_y},
                    {"max_x", fp.courtyard.max_x},
                    {"max_y", fp.courtyard.max_y}};
  auto& aps = j["aps"] = nlohmann::ordered_json::array();
  for (const ApSite& p : fp.ap_positions) aps.push_back({{"x", p.x}, {"y", p.y}});
  auto& rooms = j["classrooms"] = nlohmann::ordered_json::array();
  for (const ClassroomSite& c : fp.classrooms) {
    rooms.push_back({{"id", c.id}, {"x", c.x}, {"y", c.y}});
  }
  return j.dump(2) + "\n";
}

Floorplan load_floorplan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open floorplan file: " + path.string());
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.value("format", 0) != 1) {
    throw std::runtime_error("unsupported floorplan format in " + path.string());
  }
  Floorplan fp;
  fp.width_m = j.at("width_m").get<double>();
  fp.height_m = j.at("height_m").get<double>();
  fp.courtyard = rect_from_json(j.at("courtyard"));
  for (const auto& p : j.at("aps")) {
    fp.ap_positions.push_back({p.at("x").get<double>(), p.at("y").get<double>()});
  }
  for (const auto& c : j.at("classrooms")) {
    fp.classrooms.push_back(
        {c.at("id").get<std::string>(), c.at("x").get<double>(), c.at("y").get<double>()});
  }
  if (auto violations = validate_floorplan(fp); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return fp;
}

void save_floorplan(const std::filesystem::path& path, const Floorplan& fp) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write floorplan file: " + path.string());
  out << floorplan_to_json(fp);
}

ClassroomScenarioSpec ClassroomScenarioSpec::make(double rho, std::uint64_t seed) {
  ClassroomScenarioSpec spec;
  spec.floorplan = default_floorplan();
  spec.rho = rho;
  spec.rng_seed = seed;
  return spec;
}

Scenario gen_classroom_scenario(const ClassroomScenarioSpec& spec) {
  if (!(spec.rho > 0.0 && spec.rho <= 1.0)) {
    throw std::invalid_argument("rho must be in (0, 1]");
  }
  if (spec.students_per_classroom < 0 || spec.roaming_students < 0) {
    throw std::invalid_argument("student counts must be non-negative");
  }
  const Floorplan& fp = spec.floorplan;
  if (auto violations = validate_floorplan(fp); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }

  Rng rng(spec.rng_seed);

  Scenario s;
  s.width_m = fp.width_m;
  s.height_m = fp.height_m;
  s.radio = spec.radio;
  s.interference_radii = spec.interference_radii;
  s.spectrum_size = spec.spectrum_size;

  const int ap_w = id_width(static_cast<int>(fp.ap_positions.size()));
  for (std::size_t i = 0; i < fp.ap_positions.size(); ++i) {
    s.aps.push_back(
        {padded_id("ap", static_cast<int>(i), ap_w), fp.ap_positions[i].x, fp.ap_positions[i].y});
  }

  // Occupied classrooms: round(rho * |classrooms|), uniform without
  // replacement (partial Fisher-Yates), then placed in index order.
  const int n_rooms = static_cast<int>(fp.classrooms.size());
  const int n_selected =
      static_cast<int>(std::lround(spec.rho * static_cast<double>(n_rooms)));
  std::vector<int> room_order(static_cast<std::size_t>(n_rooms));
  std::iota(room_order.begin(), room_order.end(), 0);
  for (int i = 0; i < n_selected; ++i) {
    std::swap(room_order[static_cast<std::size_t>(i)],
              room_order[static_cast<std::size_t>(rng.uniform_int(i, n_rooms - 1))]);
  }
  std::vector<int> selected(room_order.begin(), room_order.begin() + n_selected);
  std::sort(selected.begin(), selected.end());

  const double sigma = spec.placement_sigma_normalized * std::max(fp.width_m, fp.height_m);
  const int total_wds =
      n_selected * spec.students_per_classroom + spec.roaming_students;
  const int wd_w = id_width(total_wds);
  int wd_index = 0;

  const auto sample_into_building = [&](auto&& draw) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      const auto [x, y] = draw();
      if (inside_building(fp, x, y)) return std::make_pair(x, y);
    }
    throw std::runtime_error("rejection sampling failed: building area too constrained");
  };

  for (int room_index : selected) {
    const ClassroomSite& room = fp.classrooms[static_cast<std::size_t>(room_index)];
    for (int sVal = 0; sVal < spec.students_per_classroom; ++sVal) {
      const auto [x, y] = sample_into_building(
          [&] { return std::make_pair(rng.normal(room.x, sigma), rng.normal(room.y, sigma)); });
      s.wds.push_back({padded_id("wd", wd_index++, wd_w), x, y});
    }
  }
  for (int i = 0; i < spec.roaming_students; ++i) {
    const auto [x, y] = sample_into_building([&] {
      return std::make_pair(rng.uniform01() * fp.width_m, rng.uniform01() * fp.height_m);
    });
    s.wds.push_back({padded_id("wd", wd_index++, wd_w), x, y});
  }
  return s;
}

Scenario gen_random_scenario(const RandomScenarioSpec& spec) {
  if (spec.n_aps < 1) throw std::invalid_argument("at least one access point required");
  if (spec.n_wds < 0) throw std::invalid_argument("device count must be non-negative");
  if (!(spec.width_m > 0.0) || !(spec.height_m > 0.0)) {
    throw std::invalid_argument("scenario dimensions must be positive");
  }

  Rng rng(spec.rng_seed);
  Scenario s;
  s.width_m = spec.width_m;
  s.height_m = spec.height_m;
  s.radio = spec.radio;
  s.interference_radii = spec.interference_radii;
  s.spectrum_size = spec.spectrum_size;

  const int ap_w = id_width(spec.n_aps);
  for (int i = 0; i < spec.n_aps; ++i) {
    s.aps.push_back(
        {padded_id("ap", i, ap_w), rng.uniform01() * spec.width_m, rng.uniform01() * spec.height_m});
  }
  const int wd_w = id_width(spec.n_wds);
  for (int i = 0; i < spec.n_wds; ++i) {
    s.wds.push_back(
        {padded_id("wd", i, wd_w), rng.uniform01() * spec.width_m, rng.uniform01() * spec.height_m});
  }
  return s;
}

const std::vector<std::pair<int, int>>& corpus_combos() {
  static const std::vector<std::pair<int, int>> combos = {
      {15, 15}, {15, 75}, {15, 150}, {50, 50}, {50, 250},
      {50, 500}, {100, 100}, {100, 500}, {100, 1000}};
  return combos;
}

std::vector<NamedScenario> gen_corpus(std::uint64_t master_seed) {
  std::vector<NamedScenario> corpus;
  corpus.reserve(282);

  std::uint64_t stream = 0;
  for (const auto& [n_aps, n_wds] : corpus_combos()) {
    const std::string combo = std::to_string(n_aps) + "x" + std::to_string(n_wds);
    for (int instance = 0; instance < 30; ++instance) {
      RandomScenarioSpec spec;
      spec.n_aps = n_aps;
      spec.n_wds = n_wds;
      spec.rng_seed = derive_seed(master_seed, stream++);
      corpus.push_back({"random-" + combo + "-" + padded_id("", instance, 2), "random", combo,
                        gen_random_scenario(spec)});
    }
  }

  for (double rho : {0.25, 0.5, 0.75, 1.0}) {
    const std::string rho_tag = padded_id("", static_cast<int>(std::lround(rho * 100)), 3);
    for (int instance = 0; instance < 3; ++instance) {
      ClassroomScenarioSpec spec =
          ClassroomScenarioSpec::make(rho, derive_seed(master_seed, stream++));
      corpus.push_back({"classroom-" + rho_tag + "-" + std::to_string(instance), "classroom",
                        std::to_string(rho).substr(0, 4), gen_classroom_scenario(spec)});
    }
  }
  return corpus;
}

std::pair<std::string, std::string> classify_scenario_id(const std::string& id) {
  if (id.rfind("random-", 0) == 0) {
    const std::size_t second = id.find('-', 7);
    if (second != std::string::npos) return {"random", id.substr(7, second - 7)};
  }
  if (id.rfind("classroom-", 0) == 0) {
    const std::size_t second = id.find('-', 10);
    if (second != std::string::npos) {
      const std::string tag = id.substr(10, second - 10);
      if (tag.size() == 3) {
        const double rho = std::stod(tag) / 100.0;
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.2f", rho);
        return {"classroom", buf};
      }
    }
  }
  return {"file", "-"};
}

}  // namespace wifiplan
