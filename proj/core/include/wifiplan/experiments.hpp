#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wifiplan/contraction.hpp"
#include "wifiplan/optimizers.hpp"
#include "wifiplan/scenario_gen.hpp"
#include "wifiplan/stats.hpp"

namespace wifiplan {

// --- correlation study -----------------------------------------------------
//
// For each graph: draw random colorings, score each one with the detailed
// model (mean U_v over all vertices) and with the simplified model on both
// contractions (mean U'_v over access points). The simplified axis is
// negated (it is an interference sum, lower = better) so that both axes
// read "higher is better", then both axes are normalized per graph from
// the observed worst (0) to the observed best (1), and the Pearson
// coefficient of the point cloud is reported per (graph, mode).

struct CorrelationPoint {
  double simplified = 0.0;  // normalized, higher = better
  double detailed = 0.0;    // normalized, higher = better
};

struct CorrelationRecord {
  std::string graph_id;
  ContractionMode mode = ContractionMode::uniform;
  std::optional<double> pearson_r;        // nullopt: undefined (zero variance)
  std::vector<CorrelationPoint> points;   // kept only when keep_points is set
};

struct ModeSummary {
  std::size_t defined = 0;
  std::size_t undefined = 0;
  FiveNumber box;  // over defined coefficients only
};

struct CorrelationStudyResult {
  std::vector<CorrelationRecord> records;  // one per (graph, mode)
  std::map<ContractionMode, ModeSummary> modes;
};

struct CorrelationConfig {
  int colorings_per_graph = 1000;
  std::uint64_t seed = 0;
  bool keep_points = false;
  int jobs = 1;
};

CorrelationStudyResult correlation_study(const std::vector<NamedScenario>& corpus,
                                         const CorrelationConfig& cfg);

void write_correlation_csv(std::ostream& out, const CorrelationStudyResult& result);
void write_scatter_csv(std::ostream& out, const CorrelationRecord& record);
std::string correlation_summary_json(const CorrelationStudyResult& result);

// --- strategy benchmark ------------------------------------------------------

enum class Strategy { sa_g, lccs, sa_u, sa_w };

std::string to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);
const std::vector<Strategy>& all_strategies();

struct BenchmarkRow {
  std::string scenario_id;
  std::string family;
  std::string rho_or_combo;
  Strategy strategy = Strategy::sa_g;
  int run = 0;
  std::uint64_t seed = 0;
  double mean_utility = 0.0;  // detailed utility per vertex, in [0, 1]
  double wall_clock_s = 0.0;  // elapsed around the optimize call only
  double cpu_time_s = 0.0;
  std::uint64_t detailed_evaluations = 0;  // during the cell, incl. the final application
  bool failed = false;
  std::string error;
};

struct BenchmarkCell {
  std::string scenario_id;
  Strategy strategy = Strategy::sa_g;
  int runs = 0;
  double mean_utility = 0.0;
  double utility_ci95 = 0.0;
  double mean_wall_clock_s = 0.0;
  double wall_clock_ci95_s = 0.0;
  double mean_cpu_s = 0.0;
};

struct BenchmarkResult {
  std::vector<BenchmarkRow> rows;    // sorted by (scenario, strategy, run)
  std::vector<BenchmarkCell> cells;  // aggregated, same order
};

struct BenchmarkConfig {
  int runs_per_cell = 10;
  std::uint64_t seed = 0;
  SAConfig sa;      // rng_seed ignored; per-run seeds derive from `seed`
  LccsConfig lccs;  // likewise
  int jobs = 1;
};

/// Runs every (scenario, strategy, run) cell. sa_g anneals the detailed
/// utility on the full graph; sa_u / sa_w anneal the simplified utility on
/// the respective contraction and the winning coloring is then applied to
/// the full graph (one detailed evaluation, outside the timer); lccs runs
/// on the full graph. Wall clock covers the optimize call only. A strategy
/// failure becomes a failed row; the run continues.
BenchmarkResult benchmark(const std::vector<NamedScenario>& scenarios,
                          const std::vector<Strategy>& strategies, const BenchmarkConfig& cfg);

/// Header: scenario_id,family,rho_or_combo,strategy,run,seed,mean_utility,wall_clock_s
void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
std::string benchmark_summary_json(const BenchmarkResult& result);

}  // namespace wifiplan
