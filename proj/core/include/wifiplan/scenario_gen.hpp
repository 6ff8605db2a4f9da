#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wifiplan/types.hpp"

namespace wifiplan {

struct Rect {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  bool contains(double x, double y) const {
    return x >= min_x && x <= max_x && y >= min_y && y <= max_y;
  }
};

struct ClassroomSite {
  std::string id;
  double x = 0.0;
  double y = 0.0;
};

struct ApSite {
  double x = 0.0;
  double y = 0.0;
};

/// A building: rectangular outline, an excluded courtyard, fixed access
/// point positions and classroom centers.
struct Floorplan {
  double width_m = 130.0;
  double height_m = 130.0;
  Rect courtyard;
  std::vector<ApSite> ap_positions;
  std::vector<ClassroomSite> classrooms;
};

/// The bundled synthetic plan: a 130 m square with a central courtyard and
/// a corridor ring holding 48 classrooms and 26 access points, evenly
/// spaced along the ring's center line. A stand-in geometry; real plans
/// load through load_floorplan.
Floorplan default_floorplan();

/// Checks that all classrooms and access points lie inside the building
/// and outside the courtyard; returns violations (empty = ok).
std::vector<std::string> validate_floorplan(const Floorplan& fp);

Floorplan load_floorplan(const std::filesystem::path& path);
std::string floorplan_to_json(const Floorplan& fp);
void save_floorplan(const std::filesystem::path& path, const Floorplan& fp);

struct ClassroomScenarioSpec {
  Floorplan floorplan;  // defaults to default_floorplan() via make()
  double rho = 1.0;     // fraction of classrooms in use, (0, 1]
  int students_per_classroom = 25;
  int roaming_students = 100;
  double placement_sigma_normalized = 0.05;  // times max(width, height)
  RadioParams radio;
  InterferenceRadii interference_radii;
  int spectrum_size = 11;
  std::uint64_t rng_seed = 0;

  static ClassroomScenarioSpec make(double rho, std::uint64_t seed);
};

/// Selects round(rho * |classrooms|) classrooms uniformly at random without
/// replacement, places students_per_classroom devices per selected room
/// (2D normal around the room center, sigma = placement_sigma_normalized *
/// max(side lengths), rejection-sampled into the building minus courtyard)
/// plus roaming_students devices uniform over the building minus courtyard.
/// Seed-reproducible. Throws std::invalid_argument for rho outside (0, 1].
Scenario gen_classroom_scenario(const ClassroomScenarioSpec& spec);

struct RandomScenarioSpec {
  int n_aps = 1;
  int n_wds = 0;
  double width_m = 100.0;
  double height_m = 100.0;
  RadioParams radio;
  InterferenceRadii interference_radii;
  int spectrum_size = 11;
  std::uint64_t rng_seed = 0;
};

/// Access points and devices uniform in the rectangle; seed-reproducible.
Scenario gen_random_scenario(const RandomScenarioSpec& spec);

struct NamedScenario {
  std::string id;
  std::string family;        // "random" | "classroom" | "file"
  std::string rho_or_combo;  // e.g. "0.25" or "15x75"
  Scenario scenario;
};

/// The experiment corpus: 30 random scenarios per each of the nine
/// (|AP|, |WD|) combinations (15,15) (15,75) (15,150) (50,50) (50,250)
/// (50,500) (100,100) (100,500) (100,1000), plus 3 classroom scenarios per
/// occupancy ratio in {0.25, 0.5, 0.75, 1.0}: 270 + 12 scenarios. Child
/// seeds derive deterministically from the master seed.
std::vector<NamedScenario> gen_corpus(std::uint64_t master_seed);

/// The nine (|AP|, |WD|) corpus combinations, in order.
const std::vector<std::pair<int, int>>& corpus_combos();

/// Parses family and rho/combo from a scenario id of the forms used by
/// gen_corpus ("random-15x75-03", "classroom-025-1"); anything else is
/// family "file".
std::pair<std::string, std::string> classify_scenario_id(const std::string& id);

}  // namespace wifiplan
