#include "wifiplan/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <functional>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "wifiplan/interference_matrix.hpp"
#include "wifiplan/radio.hpp"
#include "wifiplan/rng.hpp"

namespace wifiplan {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

/// Runs fn(i) for i in [0, count) on `jobs` threads. Tasks own their state;
/// results land in pre-sized slots, so the output order is independent of
/// scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t n_workers = std::min(static_cast<std::size_t>(jobs), count);
  workers.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

/// Min-max normalization to [0, 1]; a constant series maps to all zeros
/// (its Pearson coefficient is undefined either way).
std::vector<double> normalize01(const std::vector<double>& xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  std::vector<double> out(xs.size(), 0.0);
  if (*hi > *lo) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (xs[i] - *lo) / (*hi - *lo);
  }
  return out;
}

struct GraphStudy {
  CorrelationRecord uniform;
  CorrelationRecord weighted;
};

GraphStudy study_one_graph(const NamedScenario& item, const CorrelationConfig& cfg) {
  const NetworkGraph graph = build_graph(item.scenario);
  const InterferenceMatrix matrix = default_interference_matrix(item.scenario.spectrum_size);
  const DetailedEvaluator detailed(graph, item.scenario.radio, matrix);
  const SimplifiedEvaluator uniform(contract(graph, ContractionMode::uniform), matrix);
  const SimplifiedEvaluator weighted(contract(graph, ContractionMode::weighted), matrix);

  const int n = cfg.colorings_per_graph;
  const std::size_t n_aps = graph.ap_ids.size();
  const double n_vertices = static_cast<double>(graph.ap_ids.size() + graph.wd_ids.size());

  std::vector<double> detailed_mean(static_cast<std::size_t>(n));
  std::vector<double> uniform_mean(static_cast<std::size_t>(n));
  std::vector<double> weighted_mean(static_cast<std::size_t>(n));

  Rng rng(derive_seed(cfg.seed, fnv1a64(item.id)));
  std::vector<int> channels(n_aps);
  for (int i = 0; i < n; ++i) {
    for (int& c : channels) c = rng.uniform_int(1, item.scenario.spectrum_size);
    detailed_mean[static_cast<std::size_t>(i)] = detailed.evaluate_total(channels) / n_vertices;
    // The simplified score is an interference sum (lower = better); negate
    // so both axes read "higher is better" before normalizing.
    uniform_mean[static_cast<std::size_t>(i)] =
        -uniform.evaluate_total(channels) / static_cast<double>(n_aps);
    weighted_mean[static_cast<std::size_t>(i)] =
        -weighted.evaluate_total(channels) / static_cast<double>(n_aps);
  }

  const std::vector<double> y = normalize01(detailed_mean);

  GraphStudy out;
  for (ContractionMode mode : {ContractionMode::uniform, ContractionMode::weighted}) {
    const std::vector<double> x =
        normalize01(mode == ContractionMode::uniform ? uniform_mean : weighted_mean);
    CorrelationRecord rec;
    rec.graph_id = item.id;
    rec.mode = mode;
    rec.pearson_r = pearson(x, y);
    if (cfg.keep_points) {
      rec.points.reserve(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) rec.points.push_back({x[i], y[i]});
    }
    (mode == ContractionMode::uniform ? out.uniform : out.weighted) = std::move(rec);
  }
  return out;
}

}  // namespace

CorrelationStudyResult correlation_study(const std::vector<NamedScenario>& corpus,
                                         const CorrelationConfig& cfg) {
  if (corpus.empty()) throw std::invalid_argument("correlation study needs a non-empty corpus");
  if (cfg.colorings_per_graph < 2) {
    throw std::invalid_argument("colorings_per_graph must be >= 2");
  }

  std::vector<GraphStudy> studies(corpus.size());
  parallel_for(corpus.size(), cfg.jobs,
               [&](std::size_t i) { studies[i] = study_one_graph(corpus[i], cfg); });

  CorrelationStudyResult result;
  for (GraphStudy& s : studies) {
    result.records.push_back(std::move(s.uniform));
    result.records.push_back(std::move(s.weighted));
  }

  for (ContractionMode mode : {ContractionMode::uniform, ContractionMode::weighted}) {
    std::vector<double> rs;
    ModeSummary summary;
    for (const CorrelationRecord& rec : result.records) {
      if (rec.mode != mode) continue;
      if (rec.pearson_r) {
        rs.push_back(*rec.pearson_r);
      } else {
        ++summary.undefined;
      }
    }
    summary.defined = rs.size();
    if (!rs.empty()) summary.box = five_number_summary(std::move(rs));
    result.modes[mode] = summary;
  }
  return result;
}

void write_correlation_csv(std::ostream& out, const CorrelationStudyResult& result) {
  out << "graph_id,mode,pearson_r\n";
  for (const CorrelationRecord& rec : result.records) {
    out << rec.graph_id << ',' << to_string(rec.mode) << ','
        << (rec.pearson_r ? fmt(*rec.pearson_r) : "nan") << '\n';
  }
}

void write_scatter_csv(std::ostream& out, const CorrelationRecord& record) {
  out << "simplified_utility_norm,detailed_utility_norm\n";
  for (const CorrelationPoint& p : record.points) {
    out << fmt(p.simplified) << ',' << fmt(p.detailed) << '\n';
  }
}

std::string correlation_summary_json(const CorrelationStudyResult& result) {
  nlohmann::ordered_json j;
  for (ContractionMode mode : {ContractionMode::uniform, ContractionMode::weighted}) {
    const auto it = result.modes.find(mode);
    if (it == result.modes.end()) continue;
    const ModeSummary& s = it->second;
    j["modes"][to_string(mode)] = {
        {"defined", s.defined},
        {"undefined", s.undefined},
        {"box",
         {{"min", s.box.min},
          {"q1", s.box.q1},
          {"median", s.box.median},
          {"q3", s.box.q3},
          {"max", s.box.max}}}};
  }
  return j.dump(2) + "\n";
}

// --- benchmark ---------------------------------------------------------------

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::sa_g: return "sa-g";
    case Strategy::lccs: return "lccs";
    case Strategy::sa_u: return "sa-u";
    case Strategy::sa_w: return "sa-w";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  if (name == "sa-g") return Strategy::sa_g;
  if (name == "lccs") return Strategy::lccs;
  if (name == "sa-u") return Strategy::sa_u;
  if (name == "sa-w") return Strategy::sa_w;
  return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> v = {Strategy::sa_g, Strategy::lccs, Strategy::sa_u,
                                          Strategy::sa_w};
  return v;
}

namespace {

int strategy_ordinal(Strategy s) { return static_cast<int>(s); }

// DetailedEvaluator owns an atomic counter and cannot move; everything is
// built in place (optional::emplace below).
struct PreparedScenario {
  const NamedScenario* item;
  InterferenceMatrix matrix;
  NetworkGraph graph;
  DetailedEvaluator detailed;
  SimplifiedEvaluator uniform_eval;
  SimplifiedEvaluator weighted_eval;
  double vertex_count;

  explicit PreparedScenario(const NamedScenario& it)
      : item(&it),
        matrix(default_interference_matrix(it.scenario.spectrum_size)),
        graph(build_graph(it.scenario)),
        detailed(graph, it.scenario.radio, matrix),
        uniform_eval(contract(graph, ContractionMode::uniform), matrix),
        weighted_eval(contract(graph, ContractionMode::weighted), matrix),
        vertex_count(static_cast<double>(graph.ap_ids.size() + graph.wd_ids.size())) {}
};

BenchmarkRow run_cell(const PreparedScenario& p, Strategy strategy, int run,
                      const BenchmarkConfig& cfg) {
  const NamedScenario& item = *p.item;
  BenchmarkRow row;
  row.scenario_id = item.id;
  row.family = item.family;
  row.rho_or_combo = item.rho_or_combo;
  row.strategy = strategy;
  row.run = run;
  row.seed = derive_seed(derive_seed(cfg.seed, fnv1a64(item.id)),
                         static_cast<std::uint64_t>(strategy_ordinal(strategy)) * 1000003ULL +
                             static_cast<std::uint64_t>(run));

  const DetailedEvaluator& detailed = p.detailed;
  const std::uint64_t evals_before = detailed.evaluation_count();
  const int k = item.scenario.spectrum_size;

  OptimizationResult opt;
  double mean_utility = 0.0;

  switch (strategy) {
    case Strategy::sa_g: {
      SAConfig sa = cfg.sa;
      sa.rng_seed = row.seed;
      const Objective obj = detailed_objective(detailed);
      opt = simulated_annealing(detailed.ap_ids(), k, obj, sa);
      mean_utility = opt.best_score / p.vertex_count;
      break;
    }
    case Strategy::lccs: {
      LccsConfig lc = cfg.lccs;
      lc.rng_seed = row.seed;
      opt = lccs(detailed, lc);
      mean_utility = opt.best_score / p.vertex_count;
      break;
    }
    case Strategy::sa_u:
    case Strategy::sa_w: {
      const SimplifiedEvaluator& simplified =
          strategy == Strategy::sa_u ? p.uniform_eval : p.weighted_eval;
      SAConfig sa = cfg.sa;
      sa.rng_seed = row.seed;
      const Objective obj = simplified_objective(simplified);
      opt = simulated_annealing(detailed.ap_ids(), k, obj, sa);
      // The winning coloring is applied to the full graph afterwards; this
      // is the cell's single detailed evaluation and stays outside the timer.
      mean_utility = detailed.evaluate_total(detailed.from_coloring(opt.best_coloring)) /
                     p.vertex_count;
      break;
    }
  }

  row.mean_utility = mean_utility;
  row.wall_clock_s = opt.wall_clock_s;
  row.cpu_time_s = opt.cpu_time_s;
  row.detailed_evaluations = detailed.evaluation_count() - evals_before;
  return row;
}

}  // namespace

BenchmarkResult benchmark(const std::vector<NamedScenario>& scenarios,
                          const std::vector<Strategy>& strategies, const BenchmarkConfig& cfg) {
  if (scenarios.empty()) throw std::invalid_argument("benchmark needs at least one scenario");
  if (strategies.empty()) throw std::invalid_argument("benchmark needs at least one strategy");
  if (cfg.runs_per_cell < 1) throw std::invalid_argument("runs_per_cell must be >= 1");

  std::vector<std::vector<BenchmarkRow>> per_scenario(scenarios.size());

  parallel_for(scenarios.size(), cfg.jobs, [&](std::size_t i) {
    const NamedScenario& item = scenarios[i];
    std::vector<BenchmarkRow>& rows = per_scenario[i];
    std::optional<PreparedScenario> prepared;
    std::string prepare_error;
    try {
      prepared.emplace(item);
    } catch (const std::exception& e) {
      prepare_error = e.what();
    }
    for (Strategy strategy : strategies) {
      for (int run = 0; run < cfg.runs_per_cell; ++run) {
        if (!prepared) {
          BenchmarkRow row;
          row.scenario_id = item.id;
          row.family = item.family;
          row.rho_or_combo = item.rho_or_combo;
          row.strategy = strategy;
          row.run = run;
          row.failed = true;
          row.error = prepare_error;
          row.mean_utility = std::nan("");
          row.wall_clock_s = std::nan("");
          rows.push_back(std::move(row));
          continue;
        }
        try {
          rows.push_back(run_cell(*prepared, strategy, run, cfg));
        } catch (const std::exception& e) {
          BenchmarkRow row;
          row.scenario_id = item.id;
          row.family = item.family;
          row.rho_or_combo = item.rho_or_combo;
          row.strategy = strategy;
          row.run = run;
          row.failed = true;
          row.error = e.what();
          row.mean_utility = std::nan("");
          row.wall_clock_s = std::nan("");
          rows.push_back(std::move(row));
        }
      }
    }
  });

  BenchmarkResult result;
  for (std::vector<BenchmarkRow>& rows : per_scenario) {
    for (BenchmarkRow& row : rows) result.rows.push_back(std::move(row));
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const BenchmarkRow& a, const BenchmarkRow& b) {
              return std::tie(a.scenario_id, a.strategy, a.run) <
                     std::tie(b.scenario_id, b.strategy, b.run);
            });

  // Aggregate per (scenario, strategy) over the successful runs.
  for (std::size_t i = 0; i < result.rows.size();) {
    std::size_t j = i;
    std::vector<double> utilities;
    std::vector<double> clocks;
    std::vector<double> cpu;
    while (j < result.rows.size() && result.rows[j].scenario_id == result.rows[i].scenario_id &&
           result.rows[j].strategy == result.rows[i].strategy) {
      if (!result.rows[j].failed) {
        utilities.push_back(result.rows[j].mean_utility);
        clocks.push_back(result.rows[j].wall_clock_s);
        cpu.push_back(result.rows[j].cpu_time_s);
      }
      ++j;
    }
    BenchmarkCell cell;
    cell.scenario_id = result.rows[i].scenario_id;
    cell.strategy = result.rows[i].strategy;
    cell.runs = static_cast<int>(utilities.size());
    if (!utilities.empty()) {
      cell.mean_utility = mean(utilities);
      cell.utility_ci95 = mean_ci95_halfwidth(utilities);
      cell.mean_wall_clock_s = mean(clocks);
      cell.wall_clock_ci95_s = mean_ci95_halfwidth(clocks);
      cell.mean_cpu_s = mean(cpu);
    }
    result.cells.push_back(std::move(cell));
    i = j;
  }
  return result;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "scenario_id,family,rho_or_combo,strategy,run,seed,mean_utility,wall_clock_s\n";
  for (const BenchmarkRow& row : rows) {
    out << row.scenario_id << ',' << row.family << ',' << row.rho_or_combo << ','
        << to_string(row.strategy) << ',' << row.run << ',' << row.seed << ','
        << fmt(row.mean_utility) << ',' << fmt(row.wall_clock_s) << '\n';
  }
}

std::string benchmark_summary_json(const BenchmarkResult& result) {
  nlohmann::ordered_json j;
  auto& cells = j["cells"] = nlohmann::ordered_json::array();
  for (const BenchmarkCell& cell : result.cells) {
    cells.push_back({{"scenario_id", cell.scenario_id},
                     {"strategy", to_string(cell.strategy)},
                     {"runs", cell.runs},
                     {"mean_utility", cell.mean_utility},
                     {"utility_ci95", cell.utility_ci95},
                     {"mean_wall_clock_s", cell.mean_wall_clock_s},
                     {"wall_clock_ci95_s", cell.wall_clock_ci95_s},
                     {"mean_cpu_s", cell.mean_cpu_s}});
  }
  return j.dump(2) + "\n";
}

}  // namespace wifiplan
