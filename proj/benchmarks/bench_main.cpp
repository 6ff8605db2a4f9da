#include <benchmark/benchmark.h>

#include "wifiplan/contraction.hpp"
#include "wifiplan/network_graph.hpp"
#include "wifiplan/optimizers.hpp"
#include "wifiplan/radio.hpp"
#include "wifiplan/scenario_gen.hpp"

using namespace wifiplan;

namespace {

// Shared fixture: the quarter-occupancy floorplan scenario, its graph and
// both evaluators. Built once.
struct Setup {
  Scenario scenario;
  NetworkGraph graph;
  InterferenceMatrix matrix = default_interference_matrix(11);
  DetailedEvaluator detailed;
  SimplifiedEvaluator weighted;
  std::vector<int> channels;

  Setup()
      : scenario(gen_classroom_scenario(ClassroomScenarioSpec::make(0.25, 7))),
        graph(build_graph(scenario)),
        detailed(graph, scenario.radio, matrix),
        weighted(contract(graph, ContractionMode::weighted), matrix),
        channels(random_channels(graph.ap_ids.size(), 11, 1)) {}
};

Setup& setup() {
  static Setup s;
  return s;
}

}  // namespace

static void BM_PathLoss(benchmark::State& state) {
  double d = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_loss_db(d, 1.5, 1.5));
    d = d < 100.0 ? d + 0.1 : 1.0;
  }
}
BENCHMARK(BM_PathLoss);

static void BM_BuildGraph(benchmark::State& state) {
  const Scenario& s = setup().scenario;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(s));
  }
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMillisecond);

static void BM_Contract(benchmark::State& state) {
  const NetworkGraph& g = setup().graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contract(g, ContractionMode::weighted));
  }
}
BENCHMARK(BM_Contract)->Unit(benchmark::kMillisecond);

static void BM_DetailedEvaluate(benchmark::State& state) {
  Setup& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.detailed.evaluate_total(s.channels));
  }
}
BENCHMARK(BM_DetailedEvaluate)->Unit(benchmark::kMicrosecond);

static void BM_SimplifiedEvaluate(benchmark::State& state) {
  Setup& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.weighted.evaluate_total(s.channels));
  }
}
BENCHMARK(BM_SimplifiedEvaluate);

static void BM_AnnealWeightedContraction(benchmark::State& state) {
  Setup& s = setup();
  const Objective obj = simplified_objective(s.weighted);
  SAConfig cfg;
  cfg.iterations = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.rng_seed = ++seed;
    benchmark::DoNotOptimize(simulated_annealing(s.graph.ap_ids, 11, obj, cfg));
  }
}
BENCHMARK(BM_AnnealWeightedContraction)->Arg(3000)->Unit(benchmark::kMillisecond);

static void BM_Lccs(benchmark::State& state) {
  Setup& s = setup();
  LccsConfig cfg;
  cfg.max_proposals = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.rng_seed = ++seed;
    benchmark::DoNotOptimize(lccs(s.detailed, cfg));
  }
}
BENCHMARK(BM_Lccs)->Arg(3000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
