#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wifiplan/radio.hpp"
#include "wifiplan/types.hpp"

namespace wifiplan {

/// A score function over channel vectors (aligned with the ap id list
/// handed to the optimizer), plus the direction that counts as better.
/// evaluate must be deterministic for a fixed coloring.
struct Objective {
  enum class Direction { maximize, minimize };

  Direction direction = Direction::maximize;
  std::string description;
  std::function<double(std::span<const int>)> evaluate;

  bool better(double a, double b) const {
    return direction == Direction::maximize ? a > b : a < b;
  }
};

/// Convenience objectives over the two evaluators. The evaluator must
/// outlive the objective.
Objective detailed_objective(const DetailedEvaluator& eval);
Objective simplified_objective(const SimplifiedEvaluator& eval);

struct SAConfig {
  int iterations = 3000;
  /// Defaults to 2% of the initial score magnitude when unset, so the
  /// schedule self-scales across objectives of different magnitude.
  std::optional<double> initial_temperature;
  double cooling_factor = 0.999;
  std::uint64_t rng_seed = 0;
};

struct TracePoint {
  int step = 0;
  double current = 0.0;
  double best = 0.0;
};

struct OptimizationResult {
  Coloring best_coloring;
  double best_score = 0.0;
  std::vector<TracePoint> score_trace;  // non-empty; entry 0 is the start state
  double wall_clock_s = 0.0;            // around the optimization loop only
  double cpu_time_s = 0.0;
};

/// Simulated annealing over colorings of `ap_ids`: start from a uniform
/// random coloring; each iteration reassigns one uniformly chosen access
/// point to a uniformly chosen different channel, accepting improvements
/// always and worsenings with probability exp(-|delta|/T); T decays
/// geometrically by cooling_factor per iteration. Returns the best
/// coloring ever seen. Fully reproducible from cfg.rng_seed.
OptimizationResult simulated_annealing(const std::vector<std::string>& ap_ids, int k,
                                       const Objective& obj, const SAConfig& cfg);

struct LccsConfig {
  enum class Mode {
    fixed_proposals,  // exactly max_proposals proposals (iteration-count parity)
    converge,         // stop after a full no-change round, capped at round_cap
  };

  Mode mode = Mode::fixed_proposals;
  int max_proposals = 3000;
  int round_cap = 50;
  std::uint64_t rng_seed = 0;
};

/// Coordinated least-congested-channel search. Starting from a random
/// coloring, access points take turns in per-round random order; each
/// proposes the channel minimizing the interference received by itself and
/// its associated devices from the rest of the network (ties broken toward
/// the smallest channel). A central controller applies a proposal only if
/// the global detailed utility does not decrease, so the utility trace is
/// non-decreasing. The result's best_score is the global detailed utility
/// total.
OptimizationResult lccs(const DetailedEvaluator& eval, const LccsConfig& cfg);
OptimizationResult lccs(const NetworkGraph& g, int k, const RadioParams& p,
                        const InterferenceMatrix& w, const LccsConfig& cfg);

/// Independent uniform channel per access point; seed-reproducible.
Coloring random_coloring(const std::vector<std::string>& ap_ids, int k, std::uint64_t seed);
std::vector<int> random_channels(std::size_t n_aps, int k, std::uint64_t seed);

struct BruteForceConfig {
  std::uint64_t enumeration_cap = 1'000'000;  // refuse above k^|aps| colorings
};

/// Exhaustive enumeration in lexicographic order; returns a global optimum,
/// ties resolved to the lexicographically smallest coloring. Refuses (throws
/// std::invalid_argument) when k^|ap_ids| exceeds the cap.
OptimizationResult brute_force(const std::vector<std::string>& ap_ids, int k,
                               const Objective& obj, const BruteForceConfig& cfg = {});

std::string optimization_result_to_json(const OptimizationResult& r);

}  // namespace wifiplan
