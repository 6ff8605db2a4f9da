#include "wifiplan/optimizers.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cmath>
#include <ctime>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "wifiplan/rng.hpp"

namespace wifiplan {

namespace {

class StopWatch {
 public:
  StopWatch()
      : wall_start_(std::chrono::steady_clock::now()), cpu_start_(std::clock()) {}

  double wall_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start_).count();
  }
  double cpu_s() const {
    return static_cast<double>(std::clock() - cpu_start_) / CLOCKS_PER_SEC;
  }

 private:
  std::chrono::steady_clock::time_point wall_start_;
  std::clock_t cpu_start_;
};

Coloring make_coloring(const std::vector<std::string>& ap_ids, std::span<const int> channels) {
  Coloring c;
  for (std::size_t i = 0; i < ap_ids.size(); ++i) c[ap_ids[i]] = channels[i];
  return c;
}

void check_inputs(const std::vector<std::string>& ap_ids, int k) {
  if (ap_ids.empty()) throw std::invalid_argument("at least one access point required");
  if (k < 1) throw std::invalid_argument("spectrum size must be >= 1");
}

}  // namespace

Objective detailed_objective(const DetailedEvaluator& eval) {
  return {Objective::Direction::maximize, "detailed utility total",
          [&eval](std::span<const int> channels) { return eval.evaluate_total(channels); }};
}

Objective simplified_objective(const SimplifiedEvaluator& eval) {
  return {Objective::Direction::minimize, "simplified utility total",
          [&eval](std::span<const int> channels) { return eval.evaluate_total(channels); }};
}

std::vector<int> random_channels(std::size_t n_aps, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("spectrum size must be >= 1");
  Rng rng(seed);
  std::vector<int> channels(n_aps);
  for (int& c : channels) c = rng.uniform_int(1, k);
  return channels;
}

Coloring random_coloring(const std::vector<std::string>& ap_ids, int k, std::uint64_t seed) {
  return make_coloring(ap_ids, random_channels(ap_ids.size(), k, seed));
}

OptimizationResult simulated_annealing(const std::vector<std::string>& ap_ids, int k,
                                       const Objective& obj, const SAConfig& cfg) {
  check_inputs(ap_ids, k);
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (!(cfg.cooling_factor > 0.0 && cfg.cooling_factor < 1.0)) {
    throw std::invalid_argument("cooling_factor must be in (0, 1)");
  }

  const StopWatch watch;
  Rng rng(cfg.rng_seed);
  const int n = static_cast<int>(ap_ids.size());

  std::vector<int> current(static_cast<std::size_t>(n));
  for (int& c : current) c = rng.uniform_int(1, k);
  double current_score = obj.evaluate(current);

  std::vector<int> best = current;
  double best_score = current_score;

  // Default start temperature: a few percent of the initial score
  // magnitude. Single-move deltas are a small slice of the total score, so
  // starting at the full magnitude would accept almost anything for most of
  // the budget.
  double temperature =
      cfg.initial_temperature.value_or(std::max(0.02 * std::abs(current_score), 1e-9));
  if (!(temperature > 0.0)) throw std::invalid_argument("initial_temperature must be > 0");

  OptimizationResult result;
  result.score_trace.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
  result.score_trace.push_back({0, current_score, best_score});

  for (int it = 1; it <= cfg.iterations; ++it) {
    const int ap = rng.uniform_int(0, n - 1);
    const int old_channel = current[static_cast<std::size_t>(ap)];
    // Uniform over the k-1 other channels; with k = 1 the move degenerates
    // to a no-op.
    int new_channel = old_channel;
    if (k > 1) {
      new_channel = rng.uniform_int(1, k - 1);
      if (new_channel >= old_channel) ++new_channel;
    }
    current[static_cast<std::size_t>(ap)] = new_channel;
    const double score = obj.evaluate(current);

    bool accept = obj.better(score, current_score);
    if (!accept) {
      const double delta = std::abs(score - current_score);
      accept = rng.uniform01() < std::exp(-delta / temperature);
    }
    if (accept) {
      current_score = score;
      if (obj.better(score, best_score)) {
        best = current;
        best_score = score;
      }
    } else {
      current[static_cast<std::size_t>(ap)] = old_channel;
    }
    temperature *= cfg.cooling_factor;
    result.score_trace.push_back({it, current_score, best_score});
  }

  result.best_coloring = make_coloring(ap_ids, best);
  result.best_score = best_score;
  result.wall_clock_s = watch.wall_s();
  result.cpu_time_s = watch.cpu_s();
  return result;
}

OptimizationResult lccs(const DetailedEvaluator& eval, const LccsConfig& cfg) {
  const std::vector<std::string>& ap_ids = eval.ap_ids();
  const int k = eval.spectrum_size();
  check_inputs(ap_ids, k);
  if (cfg.max_proposals < 1) throw std::invalid_argument("max_proposals must be >= 1");
  if (cfg.round_cap < 1) throw std::invalid_argument("round_cap must be >= 1");

  const StopWatch watch;
  Rng rng(cfg.rng_seed);
  const int n = static_cast<int>(ap_ids.size());

  // Incident interference edges per access-point group, used to score the
  // candidate channels of one access point locally.
  struct Incident {
    double linear_static;
    int other_ap;
  };
  std::vector<std::vector<Incident>> incident(static_cast<std::size_t>(n));
  for (const DetailedEvaluator::Edge& e : eval.edges()) {
    if (e.ap_u != e.ap_v) {
      incident[static_cast<std::size_t>(e.ap_u)].push_back({e.linear_static, e.ap_v});
      incident[static_cast<std::size_t>(e.ap_v)].push_back({e.linear_static, e.ap_u});
    }
  }
  std::vector<int> current = random_channels(static_cast<std::size_t>(n), k, rng.next_u64());
  double current_total = eval.evaluate_total(current);

  OptimizationResult result;
  result.score_trace.push_back({0, current_total, current_total});

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  int proposals = 0;
  const int max_proposals =
      cfg.mode == LccsConfig::Mode::fixed_proposals ? cfg.max_proposals : INT_MAX;

  for (int round = 0; proposals < max_proposals; ++round) {
    if (cfg.mode == LccsConfig::Mode::converge && round >= cfg.round_cap) break;
    rng.shuffle(order);
    bool any_applied = false;

    for (int ap : order) {
      if (proposals >= max_proposals) break;
      ++proposals;

      // The channel minimizing the interference received by this access
      // point and its devices from the rest of the network, ties toward
      // the smallest channel.
      int best_channel = 1;
      double best_local = std::numeric_limits<double>::infinity();
      for (int candidate = 1; candidate <= k; ++candidate) {
        double local = 0.0;
        for (const Incident& inc : incident[static_cast<std::size_t>(ap)]) {
          const int other = current[static_cast<std::size_t>(inc.other_ap)];
          local += inc.linear_static * eval.overlap_linear(candidate, other);
        }
        if (local < best_local) {
          best_local = local;
          best_channel = candidate;
        }
      }

      if (best_channel == current[static_cast<std::size_t>(ap)]) {
        result.score_trace.push_back({proposals, current_total, current_total});
        continue;
      }

      // Controller: apply only if the global detailed utility does not
      // decrease.
      const int old_channel = current[static_cast<std::size_t>(ap)];
      current[static_cast<std::size_t>(ap)] = best_channel;
      const double candidate_total = eval.evaluate_total(current);
      if (candidate_total >= current_total) {
        current_total = candidate_total;
        any_applied = true;
      } else {
        current[static_cast<std::size_t>(ap)] = old_channel;
      }
      result.score_trace.push_back({proposals, current_total, current_total});
    }

    if (cfg.mode == LccsConfig::Mode::converge && !any_applied) break;
  }

  result.best_coloring = make_coloring(ap_ids, current);
  result.best_score = current_total;
  result.wall_clock_s = watch.wall_s();
  result.cpu_time_s = watch.cpu_s();
  return result;
}

OptimizationResult lccs(const NetworkGraph& g, int k, const RadioParams& p,
                        const InterferenceMatrix& w, const LccsConfig& cfg) {
  if (k != w.size()) {
    throw std::invalid_argument("spectrum size does not match the interference matrix");
  }
  const DetailedEvaluator eval(g, p, w);
  return lccs(eval, cfg);
}

OptimizationResult brute_force(const std::vector<std::string>& ap_ids, int k,
                               const Objective& obj, const BruteForceConfig& cfg) {
  check_inputs(ap_ids, k);

  const std::size_t n = ap_ids.size();
  // k^n with early overflow/cap detection.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > cfg.enumeration_cap / static_cast<std::uint64_t>(k)) {
      count = cfg.enumeration_cap + 1;
      break;
    }
    count *= static_cast<std::uint64_t>(k);
  }
  if (count > cfg.enumeration_cap) {
    throw std::invalid_argument("brute force refused: k^|aps| exceeds the enumeration cap of " +
                                std::to_string(cfg.enumeration_cap) + " colorings");
  }

  const StopWatch watch;
  std::vector<int> current(n, 1);

  OptimizationResult result;
  double best_score = obj.evaluate(current);
  std::vector<int> best = current;
  result.score_trace.push_back({0, best_score, best_score});

  // Lexicographic odometer; strict-improvement updates keep the first (and
  // therefore lexicographically smallest) optimum.
  int step = 0;
  while (true) {
    std::size_t pos = n;
    while (pos > 0 && current[pos - 1] == k) {
      current[pos - 1] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++current[pos - 1];
    ++step;
    const double score = obj.evaluate(current);
    if (obj.better(score, best_score)) {
      best_score = score;
      best = current;
      result.score_trace.push_back({step, score, best_score});
    }
  }

  result.best_coloring = make_coloring(ap_ids, best);
  result.best_score = best_score;
  result.wall_clock_s = watch.wall_s();
  result.cpu_time_s = watch.cpu_s();
  return result;
}

std::string optimization_result_to_json(const OptimizationResult& r) {
  nlohmann::ordered_json j;
  j["best_score"] = r.best_score;
  j["best_coloring"] = r.best_coloring;
  j["wall_clock_s"] = r.wall_clock_s;
  j["cpu_time_s"] = r.cpu_time_s;
  auto& trace = j["trace"] = nlohmann::ordered_json::array();
  for (const TracePoint& t : r.score_trace) {
    trace.push_back({t.step, t.current, t.best});
  }
  return j.dump(2) + "\n";
}

}  // namespace wifiplan
