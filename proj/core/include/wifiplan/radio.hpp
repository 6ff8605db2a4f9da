#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wifiplan/contraction.hpp"
#include "wifiplan/interference_matrix.hpp"
#include "wifiplan/network_graph.hpp"
#include "wifiplan/types.hpp"

namespace wifiplan {

/// Distances are floored at this value before entering the propagation
/// model, so coincident nodes do not blow up the log term.
inline constexpr double min_propagation_distance_m = 0.1;

/// Two-ray-style propagation loss in dB:
///   7.6 + 40*log10(d) - 20*log10(h_t * h_r)
/// with d in meters and antenna heights in meters. Throws std::domain_error
/// for non-positive arguments.
double path_loss_db(double d_m, double tx_height_m, double rx_height_m);

/// Interference power received over one edge, in dBm:
///   W_ij + P_t + G_t + G_r - L - P_loss + psi
/// Returns nullopt when the channel pair has zero spectral overlap
/// (W_ij = -inf), i.e. the edge contributes nothing.
std::optional<double> edge_interference_dbm(int ci, int cj, double d_m,
                                            const RadioParams& p,
                                            const InterferenceMatrix& w);

/// Per-vertex utilities in [0, 1] plus their sum and mean over all
/// vertices. Keys are "ap:<id>" / "wd:<id>" since the two id namespaces
/// are independent.
struct UtilityReport {
  std::map<std::string, double> per_vertex;
  double total = 0.0;
  double mean = 0.0;
};

std::string utility_report_to_json(const UtilityReport& r);

/// Evaluates the detailed utility of colorings over a fixed graph.
///
/// Everything that does not depend on the coloring is precomputed at
/// construction: per-edge linear interference factors (transmit power,
/// gains, losses, propagation, activity index) and per-vertex signal
/// powers. Evaluating a coloring then only scales each edge factor by the
/// spectral overlap of the two access-point channels and sums in the
/// linear (mW) domain:
///   SINR_v [dB] = P_v [dBm] - 10*log10(sum_u 10^(I_uv/10))
///   U_v = clamp((SINR_v - sinr_min) / (sinr_max - sinr_min), 0, 1)
/// A vertex with no contributing interference edge has SINR = +inf and
/// utility 1.
///
/// Signal model: a wireless device's signal is the received power from its
/// own access point (same propagation formula, no overlap/activity terms);
/// an access point's signal is the strongest uplink among its associated
/// devices, and an access point with no devices has utility 1.
///
/// Colorings are passed as channel vectors aligned with ap_ids() (which is
/// NetworkGraph::ap_ids, ascending). const member functions are safe to
/// call concurrently.
class DetailedEvaluator {
 public:
  DetailedEvaluator(const NetworkGraph& g, const RadioParams& p, const InterferenceMatrix& w);

  int spectrum_size() const { return k_; }
  int ap_count() const { return static_cast<int>(ap_ids_.size()); }
  int vertex_count() const { return static_cast<int>(signal_dbm_.size()); }
  const std::vector<std::string>& ap_ids() const { return ap_ids_; }
  const RadioParams& params() const { return params_; }

  /// Total utility sum_v U_v. Increments evaluation_count().
  double evaluate_total(std::span<const int> channels_by_ap) const;

  /// Per-vertex SINR in dB (+inf when nothing interferes), indexed like
  /// vertices: access points first (ap_ids order), then wireless devices.
  std::vector<double> sinr_db(std::span<const int> channels_by_ap) const;

  UtilityReport report(std::span<const int> channels_by_ap) const;

  std::uint64_t evaluation_count() const { return evaluations_.load(); }

  struct Edge {
    int u = 0;  // vertex indices: aps first, then wds
    int v = 0;
    int ap_u = 0;  // group (access point) index of each endpoint
    int ap_v = 0;
    double linear_static = 0.0;  // 10^((P_t+G_t+G_r-L+psi-P_loss)/10)
  };
  const std::vector<Edge>& edges() const { return edges_; }
  /// Group (access point index) of a vertex index.
  int group_of(int vertex) const { return group_[static_cast<std::size_t>(vertex)]; }
  /// Linear overlap factor of a (1-based) channel pair.
  double overlap_linear(int ci, int cj) const {
    return overlap_lin_[static_cast<std::size_t>(ci - 1) * k_ + (cj - 1)];
  }

  /// Translates an index-aligned channel vector into a Coloring and back.
  Coloring to_coloring(std::span<const int> channels_by_ap) const;
  std::vector<int> from_coloring(const Coloring& c) const;

 private:
  void accumulate_interference(std::span<const int> channels_by_ap,
                               std::vector<double>& interference_lin) const;
  double utility_of(double signal_dbm, double interference_lin) const;

  int k_ = 0;
  RadioParams params_;
  std::vector<std::string> ap_ids_;
  std::vector<std::string> wd_ids_;
  std::vector<double> signal_dbm_;  // per vertex; +inf marks "always utility 1"
  std::vector<int> group_;          // per vertex
  std::vector<Edge> edges_;
  std::vector<double> overlap_lin_;  // k*k row-major
  mutable std::atomic<std::uint64_t> evaluations_{0};
};

/// One-shot detailed utility of a coloring (builds an evaluator
/// internally). The coloring must be total over the graph's access points.
UtilityReport detailed_utility(const NetworkGraph& g, const Coloring& c, const RadioParams& p,
                               const InterferenceMatrix& w);

/// SINR at a single vertex, in dB (+inf when nothing interferes).
double sinr_db(const NodeRef& v, const NetworkGraph& g, const Coloring& c, const RadioParams& p,
               const InterferenceMatrix& w);

/// Evaluates the simplified utility over a contracted graph:
///   U'_v = sum_{u in N(v)} w_uv * overlap(c(u), c(v))
/// using linear overlap factors (dB values cannot be weight-summed), so
/// lower is better and zero means no spectral overlap anywhere. The total
/// counts each edge from both endpoints.
class SimplifiedEvaluator {
 public:
  SimplifiedEvaluator(const ContractedGraph& cg, const InterferenceMatrix& w);

  int spectrum_size() const { return k_; }
  const std::vector<std::string>& ap_ids() const { return ap_ids_; }

  double evaluate_total(std::span<const int> channels_by_ap) const;
  std::vector<double> per_vertex(std::span<const int> channels_by_ap) const;

 private:
  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
  };

  int k_ = 0;
  std::vector<std::string> ap_ids_;
  std::vector<Edge> edges_;
  std::vector<double> overlap_lin_;
};

struct SimplifiedUtility {
  std::map<std::string, double> per_vertex;  // keyed by ap id
  double total = 0.0;
};

/// One-shot simplified utility; the coloring must be total over the
/// contracted graph's vertices.
SimplifiedUtility simplified_utility(const ContractedGraph& cg, const Coloring& c,
                                     const InterferenceMatrix& w);

}  // namespace wifiplan
