#include "wifiplan/radio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace wifiplan {

namespace {

constexpr double pos_inf = std::numeric_limits<double>::infinity();

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

double path_loss_db(double d_m, double tx_height_m, double rx_height_m) {
  if (!(d_m > 0.0)) throw std::domain_error("path loss requires distance > 0");
  if (!(tx_height_m > 0.0) || !(rx_height_m > 0.0)) {
    throw std::domain_error("path loss requires antenna heights > 0");
  }
  return 7.6 + 40.0 * std::log10(d_m) - 20.0 * std::log10(tx_height_m * rx_height_m);
}

std::optional<double> edge_interference_dbm(int ci, int cj, double d_m, const RadioParams& p,
                                            const InterferenceMatrix& w) {
  const double w_ij = w.db(ci, cj);
  if (w_ij == -pos_inf) return std::nullopt;
  const double loss = path_loss_db(d_m, p.tx_height_m, p.rx_height_m);
  return w_ij + p.tx_power_dbm + p.tx_gain_db + p.rx_gain_db - p.obstacle_loss_db - loss +
         p.activity_index_db;
}

DetailedEvaluator::DetailedEvaluator(const NetworkGraph& g, const RadioParams& p,
                                     const InterferenceMatrix& w)
    : k_(w.size()), params_(p), ap_ids_(g.ap_ids), wd_ids_(g.wd_ids), overlap_lin_(w.linear_table()) {
  if (!(p.tx_height_m > 0.0) || !(p.rx_height_m > 0.0)) {
    throw std::domain_error("antenna heights must be > 0");
  }
  if (!(p.sinr_min_db < p.sinr_max_db)) {
    throw std::domain_error("sinr_min_db must be < sinr_max_db");
  }

  std::unordered_map<std::string, int> ap_index;
  std::unordered_map<std::string, int> wd_index;
  for (int i = 0; i < static_cast<int>(ap_ids_.size()); ++i) ap_index[ap_ids_[i]] = i;
  for (int i = 0; i < static_cast<int>(wd_ids_.size()); ++i) wd_index[wd_ids_[i]] = i;

  const int n_aps = static_cast<int>(ap_ids_.size());
  const int n_vertices = n_aps + static_cast<int>(wd_ids_.size());
  signal_dbm_.assign(static_cast<std::size_t>(n_vertices), pos_inf);
  group_.assign(static_cast<std::size_t>(n_vertices), 0);
  for (int i = 0; i < n_aps; ++i) group_[static_cast<std::size_t>(i)] = i;

  const double power_terms = p.tx_power_dbm + p.tx_gain_db + p.rx_gain_db - p.obstacle_loss_db;

  // Association edges fix each device's signal and group; an access point's
  // signal is its strongest uplink (none -> +inf, always utility 1).
  for (const AssociationEdge& e : g.association) {
    const auto wd_it = wd_index.find(e.wd);
    const auto ap_it = ap_index.find(e.ap);
    if (wd_it == wd_index.end() || ap_it == ap_index.end()) {
      throw std::invalid_argument("association edge references unknown vertex");
    }
    const double d = std::max(e.distance_m, min_propagation_distance_m);
    const double rx = power_terms - path_loss_db(d, p.tx_height_m, p.rx_height_m);
    const int wd_vertex = n_aps + wd_it->second;
    signal_dbm_[static_cast<std::size_t>(wd_vertex)] = rx;
    group_[static_cast<std::size_t>(wd_vertex)] = ap_it->second;
    double& ap_signal = signal_dbm_[static_cast<std::size_t>(ap_it->second)];
    if (ap_signal == pos_inf || rx > ap_signal) ap_signal = rx;
  }
  for (std::size_t v = ap_ids_.size(); v < signal_dbm_.size(); ++v) {
    if (signal_dbm_[v] == pos_inf) {
      throw std::invalid_argument("wd '" + wd_ids_[v - ap_ids_.size()] +
                                  "' has no association edge");
    }
  }

  const double interference_terms = power_terms + p.activity_index_db;
  edges_.reserve(g.interference_edges.size());
  for (const InterferenceEdge& e : g.interference_edges) {
    const auto vertex_of = [&](const NodeRef& ref) {
      if (ref.kind == NodeKind::ap) {
        auto it = ap_index.find(ref.id);
        if (it == ap_index.end()) throw std::invalid_argument("unknown ap '" + ref.id + "'");
        return it->second;
      }
      auto it = wd_index.find(ref.id);
      if (it == wd_index.end()) throw std::invalid_argument("unknown wd '" + ref.id + "'");
      return n_aps + it->second;
    };
    Edge edge;
    edge.u = vertex_of(e.u);
    edge.v = vertex_of(e.v);
    edge.ap_u = group_[static_cast<std::size_t>(edge.u)];
    edge.ap_v = group_[static_cast<std::size_t>(edge.v)];
    const double d = std::max(e.distance_m, min_propagation_distance_m);
    edge.linear_static =
        db_to_linear(interference_terms - path_loss_db(d, p.tx_height_m, p.rx_height_m));
    edges_.push_back(edge);
  }
}

void DetailedEvaluator::accumulate_interference(std::span<const int> channels_by_ap,
                                                std::vector<double>& interference_lin) const {
  if (static_cast<int>(channels_by_ap.size()) != ap_count()) {
    throw std::invalid_argument("channel vector size does not match access point count");
  }
  interference_lin.assign(signal_dbm_.size(), 0.0);
  const int k = k_;
  for (const Edge& e : edges_) {
    const int cu = channels_by_ap[static_cast<std::size_t>(e.ap_u)];
    const int cv = channels_by_ap[static_cast<std::size_t>(e.ap_v)];
    const double contribution =
        e.linear_static * overlap_lin_[static_cast<std::size_t>(cu - 1) * k + (cv - 1)];
    interference_lin[static_cast<std::size_t>(e.u)] += contribution;
    interference_lin[static_cast<std::size_t>(e.v)] += contribution;
  }
}

double DetailedEvaluator::utility_of(double signal_dbm, double interference_lin) const {
  if (signal_dbm == pos_inf || interference_lin == 0.0) return 1.0;
  const double sinr = signal_dbm - 10.0 * std::log10(interference_lin);
  const double u = (sinr - params_.sinr_min_db) / (params_.sinr_max_db - params_.sinr_min_db);
  return std::clamp(u, 0.0, 1.0);
}

double DetailedEvaluator::evaluate_total(std::span<const int> channels_by_ap) const {
  evaluations_.fetch_add(1, std::memory_order_relaxed);
  std::vector<double> interference_lin;
  accumulate_interference(channels_by_ap, interference_lin);
  double total = 0.0;
  for (std::size_t v = 0; v < signal_dbm_.size(); ++v) {
    total += utility_of(signal_dbm_[v], interference_lin[v]);
  }
  return total;
}

std::vector<double> DetailedEvaluator::sinr_db(std::span<const int> channels_by_ap) const {
  std::vector<double> interference_lin;
  accumulate_interference(channels_by_ap, interference_lin);
  std::vector<double> out(signal_dbm_.size());
  for (std::size_t v = 0; v < signal_dbm_.size(); ++v) {
    if (signal_dbm_[v] == pos_inf || interference_lin[v] == 0.0) {
      out[v] = pos_inf;
    } else {
      out[v] = signal_dbm_[v] - 10.0 * std::log10(interference_lin[v]);
    }
  }
  return out;
}

UtilityReport DetailedEvaluator::report(std::span<const int> channels_by_ap) const {
  for (int c : channels_by_ap) {
    if (c < 1 || c > k_) throw std::invalid_argument("channel outside [1, k]");
  }
  std::vector<double> interference_lin;
  accumulate_interference(channels_by_ap, interference_lin);

  UtilityReport r;
  for (std::size_t v = 0; v < signal_dbm_.size(); ++v) {
    const double u = utility_of(signal_dbm_[v], interference_lin[v]);
    const bool is_ap = v < ap_ids_.size();
    const std::string key = is_ap ? "ap:" + ap_ids_[v] : "wd:" + wd_ids_[v - ap_ids_.size()];
    r.per_vertex.emplace(key, u);
    r.total += u;
  }
  r.mean = signal_dbm_.empty() ? 0.0 : r.total / static_cast<double>(signal_dbm_.size());
  return r;
}

Coloring DetailedEvaluator::to_coloring(std::span<const int> channels_by_ap) const {
  if (channels_by_ap.size() != ap_ids_.size()) {
    throw std::invalid_argument("channel vector size does not match access point count");
  }
  Coloring c;
  for (std::size_t i = 0; i < ap_ids_.size(); ++i) c[ap_ids_[i]] = channels_by_ap[i];
  return c;
}

std::vector<int> DetailedEvaluator::from_coloring(const Coloring& c) const {
  std::vector<int> channels(ap_ids_.size());
  for (std::size_t i = 0; i < ap_ids_.size(); ++i) {
    auto it = c.find(ap_ids_[i]);
    if (it == c.end() || it->second < 1 || it->second > k_) {
      throw std::invalid_argument("coloring is not total over the access points");
    }
    channels[i] = it->second;
  }
  return channels;
}

UtilityReport detailed_utility(const NetworkGraph& g, const Coloring& c, const RadioParams& p,
                               const InterferenceMatrix& w) {
  const DetailedEvaluator eval(g, p, w);
  return eval.report(eval.from_coloring(c));
}

double sinr_db(const NodeRef& v, const NetworkGraph& g, const Coloring& c, const RadioParams& p,
               const InterferenceMatrix& w) {
  const DetailedEvaluator eval(g, p, w);
  const std::vector<double> sinrs = eval.sinr_db(eval.from_coloring(c));
  const auto& ids = v.kind == NodeKind::ap ? g.ap_ids : g.wd_ids;
  const auto it = std::lower_bound(ids.begin(), ids.end(), v.id);
  if (it == ids.end() || *it != v.id) {
    throw std::invalid_argument("unknown vertex '" + v.id + "'");
  }
  std::size_t index = static_cast<std::size_t>(it - ids.begin());
  if (v.kind == NodeKind::wd) index += g.ap_ids.size();
  return sinrs[index];
}

std::string utility_report_to_json(const UtilityReport& r) {
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["mean"] = r.mean;
  j["per_vertex"] = r.per_vertex;
  return j.dump(2) + "\n";
}

SimplifiedEvaluator::SimplifiedEvaluator(const ContractedGraph& cg, const InterferenceMatrix& w)
    : k_(w.size()), ap_ids_(cg.ap_vertices), overlap_lin_(w.linear_table()) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(ap_ids_.size()); ++i) index[ap_ids_[i]] = i;
  edges_.reserve(cg.edges.size());
  for (const ContractedEdge& e : cg.edges) {
    const auto u = index.find(e.u);
    const auto v = index.find(e.v);
    if (u == index.end() || v == index.end()) {
      throw std::invalid_argument("contracted edge references unknown vertex");
    }
    edges_.push_back({u->second, v->second, static_cast<double>(e.weight)});
  }
}

double SimplifiedEvaluator::evaluate_total(std::span<const int> channels_by_ap) const {
  if (channels_by_ap.size() != ap_ids_.size()) {
    throw std::invalid_argument("channel vector size does not match vertex count");
  }
  double edge_sum = 0.0;
  const int k = k_;
  for (const Edge& e : edges_) {
    const int cu = channels_by_ap[static_cast<std::size_t>(e.u)];
    const int cv = channels_by_ap[static_cast<std::size_t>(e.v)];
    edge_sum += e.weight * overlap_lin_[static_cast<std::size_t>(cu - 1) * k + (cv - 1)];
  }
  return 2.0 * edge_sum;  // each edge counted from both endpoints
}

std::vector<double> SimplifiedEvaluator::per_vertex(std::span<const int> channels_by_ap) const {
  if (channels_by_ap.size() != ap_ids_.size()) {
    throw std::invalid_argument("channel vector size does not match vertex count");
  }
  std::vector<double> out(ap_ids_.size(), 0.0);
  const int k = k_;
  for (const Edge& e : edges_) {
    const int cu = channels_by_ap[static_cast<std::size_t>(e.u)];
    const int cv = channels_by_ap[static_cast<std::size_t>(e.v)];
    const double value =
        e.weight * overlap_lin_[static_cast<std::size_t>(cu - 1) * k + (cv - 1)];
    out[static_cast<std::size_t>(e.u)] += value;
    out[static_cast<std::size_t>(e.v)] += value;
  }
  return out;
}

SimplifiedUtility simplified_utility(const ContractedGraph& cg, const Coloring& c,
                                     const InterferenceMatrix& w) {
  const SimplifiedEvaluator eval(cg, w);
  std::vector<int> channels(cg.ap_vertices.size());
  for (std::size_t i = 0; i < cg.ap_vertices.size(); ++i) {
    auto it = c.find(cg.ap_vertices[i]);
    if (it == c.end() || it->second < 1 || it->second > w.size()) {
      throw std::invalid_argument("coloring is not total over the contracted vertices");
    }
    channels[i] = it->second;
  }
  const std::vector<double> per_vertex = eval.per_vertex(channels);
  SimplifiedUtility result;
  for (std::size_t i = 0; i < cg.ap_vertices.size(); ++i) {
    result.per_vertex.emplace(cg.ap_vertices[i], per_vertex[i]);
    result.total += per_vertex[i];
  }
  return result;
}

}  // namespace wifiplan
