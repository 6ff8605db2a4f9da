// wifiplan: model Wi-Fi networks as two-layer proximity graphs, score
// channel assignments against a dB-domain interference model, simplify via
// edge contraction, and compare assignment strategies.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wifiplan/contraction.hpp"
#include "wifiplan/experiments.hpp"
#include "wifiplan/interference_matrix.hpp"
#include "wifiplan/network_graph.hpp"
#include "wifiplan/optimizers.hpp"
#include "wifiplan/radio.hpp"
#include "wifiplan/scenario_gen.hpp"
#include "wifiplan/scenario_io.hpp"
#include "wifiplan/types.hpp"
#include "wifiplan/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("WIFIPLAN_OUT"); env && *env) return env;
  return ".";
}

// One manifest per command invocation. Data files stay timestamp-free so
// seeded runs are byte-identical; clock readings and the timestamp live
// here.
void write_manifest(const fs::path& dir, const std::string& command, std::uint64_t seed,
                    ordered_json config, const std::vector<std::string>& outputs,
                    double elapsed_s) {
  ordered_json m;
  m["tool"] = "wifiplan";
  m["version"] = std::string(wifiplan::version);
  m["command"] = command;
  m["timestamp_utc"] = timestamp_utc();
  m["master_seed"] = seed;
  m["config"] = std::move(config);
  m["outputs"] = outputs;
  m["elapsed_s"] = elapsed_s;
  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest in " + dir.string());
  out << m.dump(2) << "\n";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

wifiplan::InterferenceRadii parse_radii(const std::string& text,
                                        const wifiplan::InterferenceRadii& fallback) {
  if (text.empty()) return fallback;
  std::array<double, 3> values{};
  std::stringstream ss(text);
  std::string cell;
  for (double& v : values) {
    if (!std::getline(ss, cell, ',')) {
      throw CLI::ValidationError("--radii", "expected three comma-separated values: ap_ap,ap_wd,wd_wd");
    }
    v = std::stod(cell);
  }
  if (std::getline(ss, cell, ',')) {
    throw CLI::ValidationError("--radii", "expected exactly three values");
  }
  return {values[0], values[1], values[2]};
}

wifiplan::InterferenceMatrix matrix_for(int spectrum_size, const std::string& matrix_path) {
  if (matrix_path.empty()) return wifiplan::default_interference_matrix(spectrum_size);
  auto m = wifiplan::InterferenceMatrix::load_csv(matrix_path);
  if (m.size() != spectrum_size) {
    throw std::runtime_error("matrix size " + std::to_string(m.size()) +
                             " does not match the scenario spectrum of " +
                             std::to_string(spectrum_size) + " channels");
  }
  return m;
}

std::vector<wifiplan::NamedScenario> load_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    const fs::path p(input);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            entry.path().filename() != "manifest.json") {
          files.push_back(entry.path());
        }
      }
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw std::runtime_error("input not found: " + input);
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<wifiplan::NamedScenario> scenarios;
  scenarios.reserve(files.size());
  std::set<std::string> seen;
  for (const fs::path& f : files) {
    const std::string id = f.stem().string();
    if (!seen.insert(id).second) {
      throw std::runtime_error("duplicate scenario id '" + id +
                               "': results are keyed by file stem, rename one input");
    }
    const auto [family, label] = wifiplan::classify_scenario_id(id);
    try {
      scenarios.push_back({id, family, label, wifiplan::load_scenario(f)});
    } catch (const std::exception& e) {
      throw std::runtime_error("cannot load scenario " + f.string() + ": " + e.what());
    }
  }
  if (scenarios.empty()) throw std::runtime_error("no scenario files found");
  return scenarios;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// --- generate ----------------------------------------------------------------

struct GenerateOptions {
  double rho = 1.0;
  int aps = 15;
  int wds = 15;
  double width = 100.0;
  double height = 100.0;
  int students = 25;
  int roaming = 100;
  double sigma = 0.05;
  std::string floorplan_path;
  std::string radii_text;
  std::uint64_t seed = 0;
  std::string out;
};

std::string rho_tag(double rho) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%03d", static_cast<int>(std::lround(rho * 100)));
  return buf;
}

int run_generate_classroom(const GenerateOptions& opt, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(opt.out);
  fs::create_directories(dir);

  wifiplan::ClassroomScenarioSpec spec =
      wifiplan::ClassroomScenarioSpec::make(opt.rho, opt.seed);
  if (!opt.floorplan_path.empty()) spec.floorplan = wifiplan::load_floorplan(opt.floorplan_path);
  spec.students_per_classroom = opt.students;
  spec.roaming_students = opt.roaming;
  spec.placement_sigma_normalized = opt.sigma;
  spec.interference_radii = parse_radii(opt.radii_text, spec.interference_radii);

  const wifiplan::Scenario s = gen_classroom_scenario(spec);
  const std::string name =
      "classroom-" + rho_tag(opt.rho) + "-seed" + std::to_string(opt.seed) + ".json";
  save_scenario(dir / name, s);

  std::cout << "seed: " << opt.seed << "\n"
            << "wrote " << (dir / name).string() << " (" << s.aps.size() << " aps, "
            << s.wds.size() << " wds)\n";

  write_manifest(dir, command, opt.seed,
                 {{"rho", opt.rho},
                  {"students_per_classroom", opt.students},
                  {"roaming_students", opt.roaming},
                  {"placement_sigma_normalized", opt.sigma},
                  {"floorplan", opt.floorplan_path.empty() ? "<built-in>" : opt.floorplan_path},
                  {"radii",
                   {{"ap_ap", spec.interference_radii.ap_ap},
                    {"ap_wd", spec.interference_radii.ap_wd},
                    {"wd_wd", spec.interference_radii.wd_wd}}}},
                 {name}, timer.elapsed_s());
  return 0;
}

int run_generate_random(const GenerateOptions& opt, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(opt.out);
  fs::create_directories(dir);

  wifiplan::RandomScenarioSpec spec;
  spec.n_aps = opt.aps;
  spec.n_wds = opt.wds;
  spec.width_m = opt.width;
  spec.height_m = opt.height;
  spec.rng_seed = opt.seed;
  spec.interference_radii = parse_radii(opt.radii_text, spec.interference_radii);

  const wifiplan::Scenario s = gen_random_scenario(spec);
  const std::string name = "random-" + std::to_string(opt.aps) + "x" + std::to_string(opt.wds) +
                           "-seed" + std::to_string(opt.seed) + ".json";
  save_scenario(dir / name, s);

  std::cout << "seed: " << opt.seed << "\n"
            << "wrote " << (dir / name).string() << "\n";

  write_manifest(dir, command, opt.seed,
                 {{"aps", opt.aps},
                  {"wds", opt.wds},
                  {"width_m", opt.width},
                  {"height_m", opt.height},
                  {"radii",
                   {{"ap_ap", spec.interference_radii.ap_ap},
                    {"ap_wd", spec.interference_radii.ap_wd},
                    {"wd_wd", spec.interference_radii.wd_wd}}}},
                 {name}, timer.elapsed_s());
  return 0;
}

int run_generate_corpus(const GenerateOptions& opt, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(opt.out);
  fs::create_directories(dir);

  const auto corpus = wifiplan::gen_corpus(opt.seed);
  std::vector<std::string> outputs;
  outputs.reserve(corpus.size());
  for (const auto& item : corpus) {
    const std::string name = item.id + ".json";
    save_scenario(dir / name, item.scenario);
    outputs.push_back(name);
  }

  std::cout << "seed: " << opt.seed << "\n"
            << "wrote " << corpus.size() << " scenarios to " << dir.string() << "\n";
  write_manifest(dir, command, opt.seed, {{"scenarios", corpus.size()}}, outputs,
                 timer.elapsed_s());
  return 0;
}

// --- optimize ----------------------------------------------------------------

struct OptimizeOptions {
  std::string strategy = "sa-g";
  std::string scenario_path;
  std::string matrix_path;
  int iterations = 3000;
  double cooling = 0.999;
  std::uint64_t brute_cap = 1000000;
  std::string lccs_mode = "fixed";
  std::uint64_t seed = 0;
  bool per_vertex = false;
  std::string out;
};

int run_optimize(const OptimizeOptions& opt, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(opt.out);
  fs::create_directories(dir);

  const wifiplan::Scenario scenario = wifiplan::load_scenario(opt.scenario_path);
  const auto matrix = matrix_for(scenario.spectrum_size, opt.matrix_path);
  const wifiplan::NetworkGraph graph = build_graph(scenario);
  const wifiplan::DetailedEvaluator detailed(graph, scenario.radio, matrix);
  const double vertex_count =
      static_cast<double>(graph.ap_ids.size() + graph.wd_ids.size());
  const int k = scenario.spectrum_size;

  wifiplan::OptimizationResult result;
  std::string objective_name;

  if (opt.strategy == "sa-g" || opt.strategy == "brute") {
    const wifiplan::Objective obj = detailed_objective(detailed);
    objective_name = obj.description;
    if (opt.strategy == "brute") {
      result = brute_force(graph.ap_ids, k, obj, {opt.brute_cap});
    } else {
      wifiplan::SAConfig cfg;
      cfg.iterations = opt.iterations;
      cfg.cooling_factor = opt.cooling;
      cfg.rng_seed = opt.seed;
      result = simulated_annealing(graph.ap_ids, k, obj, cfg);
    }
  } else if (opt.strategy == "sa-u" || opt.strategy == "sa-w") {
    const auto mode = opt.strategy == "sa-u" ? wifiplan::ContractionMode::uniform
                                             : wifiplan::ContractionMode::weighted;
    const wifiplan::SimplifiedEvaluator simplified(contract(graph, mode), matrix);
    const wifiplan::Objective obj = simplified_objective(simplified);
    objective_name = obj.description + " (" + to_string(mode) + " contraction)";
    wifiplan::SAConfig cfg;
    cfg.iterations = opt.iterations;
    cfg.cooling_factor = opt.cooling;
    cfg.rng_seed = opt.seed;
    result = simulated_annealing(graph.ap_ids, k, obj, cfg);
  } else if (opt.strategy == "lccs") {
    wifiplan::LccsConfig cfg;
    cfg.mode = opt.lccs_mode == "converge" ? wifiplan::LccsConfig::Mode::converge
                                           : wifiplan::LccsConfig::Mode::fixed_proposals;
    cfg.max_proposals = opt.iterations;
    cfg.rng_seed = opt.seed;
    objective_name = "detailed utility total (coordinated search)";
    result = lccs(detailed, cfg);
  } else {
    throw CLI::ValidationError("--strategy", "unknown strategy '" + opt.strategy + "'");
  }

  // Whatever was optimized, report the coloring's detailed utility on the
  // full graph.
  const auto report = detailed.report(detailed.from_coloring(result.best_coloring));

  const std::string stem = fs::path(opt.scenario_path).stem().string();
  const std::string name = stem + "-" + opt.strategy + "-result.json";

  ordered_json j;
  j["format"] = 1;
  j["manifest"] = "manifest.json";
  j["scenario"] = stem;
  j["strategy"] = opt.strategy;
  j["seed"] = opt.seed;
  j["config"] = {{"iterations", opt.iterations},
                 {"cooling_factor", opt.cooling},
                 {"lccs_mode", opt.lccs_mode},
                 {"brute_cap", opt.brute_cap},
                 {"matrix", opt.matrix_path.empty() ? "<built-in>" : opt.matrix_path}};
  j["objective"] = objective_name;
  j["best_score"] = result.best_score;
  j["detailed_utility"] = {{"total", report.total}, {"mean", report.mean}};
  j["best_coloring"] = result.best_coloring;
  auto& trace = j["trace"] = ordered_json::array();
  for (const auto& t : result.score_trace) trace.push_back({t.step, t.current, t.best});
  write_text(dir / name, j.dump(2) + "\n");

  std::vector<std::string> outputs = {name};
  if (opt.per_vertex) {
    const std::string report_name = stem + "-" + opt.strategy + "-utilities.json";
    write_text(dir / report_name, utility_report_to_json(report));
    outputs.push_back(report_name);
  }

  std::cout << "seed: " << opt.seed << "\n"
            << "strategy: " << opt.strategy << "\n"
            << "mean detailed utility per vertex: " << report.mean << " (over " << vertex_count
            << " vertices)\n"
            << "optimizer elapsed: " << result.wall_clock_s << " s\n"
            << "wrote " << (dir / name).string() << "\n";

  write_manifest(dir, command, opt.seed,
                 {{"strategy", opt.strategy},
                  {"scenario", opt.scenario_path},
                  {"iterations", opt.iterations},
                  {"cooling_factor", opt.cooling},
                  {"matrix", opt.matrix_path.empty() ? "<built-in>" : opt.matrix_path}},
                 outputs, result.wall_clock_s);
  return 0;
}

// --- correlate ----------------------------------------------------------------

struct CorrelateOptions {
  std::vector<std::string> inputs;
  int colorings = 1000;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool scatter = false;
  std::string out;
};

int run_correlate(const CorrelateOptions& opt, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(opt.out);
  fs::create_directories(dir);

  const auto corpus = load_inputs(opt.inputs);
  wifiplan::CorrelationConfig cfg;
  cfg.colorings_per_graph = opt.colorings;
  cfg.seed = opt.seed;
  cfg.jobs = opt.jobs;
  cfg.keep_points = opt.scatter;

  std::cout << "seed: " << opt.seed << "\n"
            << "correlating " << corpus.size() << " graphs x " << opt.colorings
            << " colorings\n";
  const auto result = correlation_study(corpus, cfg);

  std::vector<std::string> outputs = {"correlation.csv", "correlation_summary.json"};
  {
    std::ofstream csv(dir / "correlation.csv");
    write_correlation_csv(csv, result);
  }
  write_text(dir / "correlation_summary.json", correlation_summary_json(result));
  if (opt.scatter) {
    for (const auto& rec : result.records) {
      const std::string name = "scatter-" + rec.graph_id + "-" + to_string(rec.mode) + ".csv";
      std::ofstream csv(dir / name);
      write_scatter_csv(csv, rec);
      outputs.push_back(name);
    }
  }

  std::size_t undefined = 0;
  for (const auto& [mode, summary] : result.modes) {
    undefined += summary.undefined;
    std::cout << to_string(mode) << " contraction: median r = " << summary.box.median << " ("
              << summary.defined << " graphs";
    if (summary.undefined > 0) std::cout << ", " << summary.undefined << " undefined";
    std::cout << ")\n";
  }
  if (undefined > 0) {
    std::cerr << "note: " << undefined
              << " record(s) had zero variance; recorded as nan and excluded from box plots\n";
  }

  write_manifest(dir, command, opt.seed,
                 {{"graphs", corpus.size()}, {"colorings_per_graph", opt.colorings},
                  {"jobs", opt.jobs}},
                 outputs, timer.elapsed_s());
  return 0;
}

// --- benchmark ----------------------------------------------------------------

struct BenchmarkOptions {
  std::vector<std::string> inputs;
  std::string strategies = "sa-g,lccs,sa-u,sa-w";
  int runs = 10;
  int iterations = 3000;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out;
};

int run_benchmark(const BenchmarkOptions& opt, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(opt.out);
  fs::create_directories(dir);

  std::vector<wifiplan::Strategy> strategies;
  std::stringstream ss(opt.strategies);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto s = wifiplan::strategy_from_string(token);
    if (!s) throw CLI::ValidationError("--strategies", "unknown strategy '" + token + "'");
    strategies.push_back(*s);
  }

  const auto scenarios = load_inputs(opt.inputs);
  wifiplan::BenchmarkConfig cfg;
  cfg.runs_per_cell = opt.runs;
  cfg.seed = opt.seed;
  cfg.sa.iterations = opt.iterations;
  cfg.lccs.max_proposals = opt.iterations;
  cfg.jobs = opt.jobs;

  std::cout << "seed: " << opt.seed << "\n"
            << "benchmarking " << scenarios.size() << " scenarios x " << strategies.size()
            << " strategies x " << opt.runs << " runs\n";
  const auto result = benchmark(scenarios, strategies, cfg);

  {
    std::ofstream csv(dir / "benchmark.csv");
    write_benchmark_csv(csv, result.rows);
  }
  write_text(dir / "benchmark_summary.json", benchmark_summary_json(result));

  std::size_t failed = 0;
  for (const auto& row : result.rows) failed += row.failed ? 1 : 0;
  for (const auto& cell : result.cells) {
    std::cout << cell.scenario_id << " " << to_string(cell.strategy) << ": mean utility "
              << cell.mean_utility << " +/- " << cell.utility_ci95 << ", mean elapsed "
              << cell.mean_wall_clock_s << " s\n";
  }
  if (failed > 0) std::cerr << failed << " run(s) failed; see benchmark.csv\n";

  write_manifest(dir, command, opt.seed,
                 {{"scenarios", scenarios.size()},
                  {"strategies", opt.strategies},
                  {"runs_per_cell", opt.runs},
                  {"iterations", opt.iterations},
                  {"jobs", opt.jobs}},
                 {"benchmark.csv", "benchmark_summary.json"}, timer.elapsed_s());
  return failed == 0 ? 0 : 1;
}

// --- graph / contract / matrix -------------------------------------------------

int run_graph(const std::string& scenario_path, const std::string& out,
              const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(out);
  fs::create_directories(dir);
  const auto scenario = wifiplan::load_scenario(scenario_path);
  const auto graph = build_graph(scenario);
  const std::string name = fs::path(scenario_path).stem().string() + "-graph.json";
  save_graph_json(dir / name, graph);
  std::cout << "aps: " << graph.ap_ids.size() << ", wds: " << graph.wd_ids.size()
            << ", association edges: " << graph.association.size()
            << ", interference edges: " << graph.interference_edges.size() << "\n"
            << "wrote " << (dir / name).string() << "\n";
  write_manifest(dir, command, 0, {{"scenario", scenario_path}}, {name}, timer.elapsed_s());
  return 0;
}

int run_contract(const std::string& scenario_path, const std::string& mode,
                 const std::string& out, const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(out);
  fs::create_directories(dir);
  const auto scenario = wifiplan::load_scenario(scenario_path);
  const auto graph = build_graph(scenario);
  const std::string stem = fs::path(scenario_path).stem().string();

  std::vector<std::string> outputs;
  for (const auto m : {wifiplan::ContractionMode::uniform, wifiplan::ContractionMode::weighted}) {
    if (mode != "both" && mode != to_string(m)) continue;
    const auto cg = contract(graph, m);
    const std::string name = stem + "-contracted-" + to_string(m) + ".json";
    save_contracted_json(dir / name, cg, m);
    outputs.push_back(name);
    std::cout << to_string(m) << ": " << cg.ap_vertices.size() << " vertices, "
              << cg.edges.size() << " edges";
    if (cg.dropped_self_loops > 0) {
      std::cout << " (dropped " << cg.dropped_self_loops << " self-loops)";
    }
    std::cout << "\nwrote " << (dir / name).string() << "\n";
  }
  write_manifest(dir, command, 0, {{"scenario", scenario_path}, {"mode", mode}}, outputs,
                 timer.elapsed_s());
  return 0;
}

int run_matrix(int k, double spacing, double bandwidth, const std::string& out,
               const std::string& command) {
  const Timer timer;
  const fs::path dir = resolve_out_dir(out);
  fs::create_directories(dir);
  const auto m = wifiplan::default_interference_matrix(k, spacing, bandwidth);
  const std::string name = "matrix-k" + std::to_string(k) + ".csv";
  m.save_csv(dir / name);
  std::cout << "wrote " << (dir / name).string() << "\n";
  write_manifest(dir, command, 0,
                 {{"k", k}, {"channel_spacing_mhz", spacing}, {"channel_bandwidth_mhz", bandwidth}},
                 {name}, timer.elapsed_s());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wi-Fi channel assignment via spectrum-aware graph coloring"};
  app.require_subcommand(1);
  const std::string command_line = join_args(argc, argv);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate scenario files");
  generate->require_subcommand(1);

  auto* classroom = generate->add_subcommand("classroom", "Floorplan-based scenario");
  classroom->add_option("--rho", gen.rho, "Fraction of classrooms in use, (0,1]")->required();
  classroom->add_option("--seed", gen.seed, "Random seed (default 0)");
  classroom->add_option("--floorplan", gen.floorplan_path, "Floorplan JSON (default: built-in)");
  classroom->add_option("--students", gen.students, "Students per classroom (default 25)");
  classroom->add_option("--roaming", gen.roaming, "Roaming students (default 100)");
  classroom->add_option("--sigma", gen.sigma, "Placement sigma, normalized (default 0.05)");
  classroom->add_option("--radii", gen.radii_text, "Interference radii ap_ap,ap_wd,wd_wd");
  classroom->add_option("--out", gen.out, "Output directory (default $WIFIPLAN_OUT or .)");

  auto* random_cmd = generate->add_subcommand("random", "Uniform random scenario");
  random_cmd->add_option("--aps", gen.aps, "Access point count")->required();
  random_cmd->add_option("--wds", gen.wds, "Wireless device count")->required();
  random_cmd->add_option("--seed", gen.seed, "Random seed (default 0)");
  random_cmd->add_option("--width", gen.width, "Area width in meters (default 100)");
  random_cmd->add_option("--height", gen.height, "Area height in meters (default 100)");
  random_cmd->add_option("--radii", gen.radii_text, "Interference radii ap_ap,ap_wd,wd_wd");
  random_cmd->add_option("--out", gen.out, "Output directory");

  auto* corpus_cmd = generate->add_subcommand("corpus", "Full experiment corpus (282 scenarios)");
  corpus_cmd->add_option("--seed", gen.seed, "Random seed (default 0)");
  corpus_cmd->add_option("--out", gen.out, "Output directory");

  OptimizeOptions opt;
  auto* optimize = app.add_subcommand("optimize", "Run one assignment strategy on a scenario");
  optimize->add_option("--strategy", opt.strategy, "sa-g|sa-u|sa-w|lccs|brute")->required();
  optimize->add_option("scenario", opt.scenario_path, "Scenario JSON file")->required();
  optimize->add_option("--iterations", opt.iterations,
                       "Annealing iterations / lccs proposals (default 3000)");
  optimize->add_option("--cooling-factor", opt.cooling, "Geometric cooling factor (default 0.999)");
  optimize->add_option("--lccs-mode", opt.lccs_mode, "fixed|converge (default fixed)");
  optimize->add_option("--brute-cap", opt.brute_cap, "Enumeration cap for brute (default 1e6)");
  optimize->add_option("--seed", opt.seed, "Random seed (default 0)");
  optimize->add_option("--matrix", opt.matrix_path, "Channel interference matrix CSV");
  optimize->add_flag("--per-vertex", opt.per_vertex,
                     "Also write the per-vertex utility report");
  optimize->add_option("--out", opt.out, "Output directory");

  CorrelateOptions cor;
  auto* correlate = app.add_subcommand("correlate",
                                       "Correlate simplified and detailed utilities");
  correlate->add_option("inputs", cor.inputs, "Scenario files or directories")->required();
  correlate->add_option("--colorings", cor.colorings, "Random colorings per graph (default 1000)");
  correlate->add_option("--seed", cor.seed, "Random seed (default 0)");
  correlate->add_option("--jobs", cor.jobs, "Worker threads (default 1)");
  correlate->add_flag("--scatter", cor.scatter, "Also write per-graph scatter files");
  correlate->add_option("--out", cor.out, "Output directory");

  BenchmarkOptions bench;
  auto* benchmark_cmd = app.add_subcommand("benchmark", "Compare assignment strategies");
  benchmark_cmd->add_option("inputs", bench.inputs, "Scenario files or directories")->required();
  benchmark_cmd->add_option("--strategies", bench.strategies,
                            "Comma list of sa-g,lccs,sa-u,sa-w (default all)");
  benchmark_cmd->add_option("--runs", bench.runs, "Runs per cell (default 10)");
  benchmark_cmd->add_option("--iterations", bench.iterations,
                            "Annealing iterations / lccs proposals (default 3000)");
  benchmark_cmd->add_option("--seed", bench.seed, "Random seed (default 0)");
  benchmark_cmd->add_option("--jobs", bench.jobs, "Worker threads (default 1)");
  benchmark_cmd->add_option("--out", bench.out, "Output directory");

  std::string graph_scenario;
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "Export the network graph of a scenario");
  graph_cmd->add_option("scenario", graph_scenario, "Scenario JSON file")->required();
  graph_cmd->add_option("--out", graph_out, "Output directory");

  std::string contract_scenario;
  std::string contract_mode = "both";
  std::string contract_out;
  auto* contract_cmd = app.add_subcommand("contract", "Export contracted graphs of a scenario");
  contract_cmd->add_option("scenario", contract_scenario, "Scenario JSON file")->required();
  contract_cmd->add_option("--mode", contract_mode, "uniform|weighted|both (default both)");
  contract_cmd->add_option("--out", contract_out, "Output directory");

  int matrix_k = 11;
  double matrix_spacing = 5.0;
  double matrix_bandwidth = 22.0;
  std::string matrix_out;
  auto* matrix_cmd = app.add_subcommand("matrix", "Export the built-in interference matrix");
  matrix_cmd->add_option("--k", matrix_k, "Spectrum size (default 11)");
  matrix_cmd->add_option("--spacing", matrix_spacing, "Channel spacing in MHz (default 5)");
  matrix_cmd->add_option("--bandwidth", matrix_bandwidth, "Channel bandwidth in MHz (default 22)");
  matrix_cmd->add_option("--out", matrix_out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classroom->parsed()) return run_generate_classroom(gen, command_line);
    if (random_cmd->parsed()) return run_generate_random(gen, command_line);
    if (corpus_cmd->parsed()) return run_generate_corpus(gen, command_line);
    if (optimize->parsed()) return run_optimize(opt, command_line);
    if (correlate->parsed()) return run_correlate(cor, command_line);
    if (benchmark_cmd->parsed()) return run_benchmark(bench, command_line);
    if (graph_cmd->parsed()) return run_graph(graph_scenario, graph_out, command_line);
    if (contract_cmd->parsed()) {
      if (contract_mode != "uniform" && contract_mode != "weighted" && contract_mode != "both") {
        throw CLI::ValidationError("--mode", "expected uniform, weighted or both");
      }
      return run_contract(contract_scenario, contract_mode, contract_out, command_line);
    }
    if (matrix_cmd->parsed()) {
      return run_matrix(matrix_k, matrix_spacing, matrix_bandwidth, matrix_out, command_line);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
