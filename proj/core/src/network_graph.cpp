#include "wifiplan/network_graph.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace wifiplan {

std::string to_string(NodeKind kind) { return kind == NodeKind::ap ? "ap" : "wd"; }

std::map<std::string, std::string> NetworkGraph::association_map() const {
  std::map<std::string, std::string> m;
  for (const AssociationEdge& e : association) m[e.wd] = e.ap;
  return m;
}

std::vector<AssociationEdge> associate(const Scenario& s) {
  if (s.aps.empty() && !s.wds.empty()) {
    throw ValidationError({"no access point to associate"});
  }
  std::vector<AssociationEdge> out;
  out.reserve(s.wds.size());
  for (const Node& wd : s.wds) {
    const Node* best = nullptr;
    double best_d = 0.0;
    for (const Node& ap : s.aps) {
      const double d = distance(wd, ap);
      if (best == nullptr || d < best_d || (d == best_d && ap.id < best->id)) {
        best = &ap;
        best_d = d;
      }
    }
    out.push_back({wd.id, best->id, best_d});
  }
  std::sort(out.begin(), out.end(),
            [](const AssociationEdge& a, const AssociationEdge& b) { return a.wd < b.wd; });
  return out;
}

std::vector<InterferenceEdge> build_interference_edges(
    const Scenario& s, const std::map<std::string, std::string>& assoc) {
  for (const Node& wd : s.wds) {
    if (assoc.find(wd.id) == assoc.end()) {
      throw std::invalid_argument("association map is not total: missing wd '" + wd.id + "'");
    }
  }

  std::vector<const Node*> aps;
  std::vector<const Node*> wds;
  for (const Node& n : s.aps) aps.push_back(&n);
  for (const Node& n : s.wds) wds.push_back(&n);
  const auto by_id = [](const Node* a, const Node* b) { return a->id < b->id; };
  std::sort(aps.begin(), aps.end(), by_id);
  std::sort(wds.begin(), wds.end(), by_id);

  std::vector<InterferenceEdge> edges;

  for (std::size_t i = 0; i < aps.size(); ++i) {
    for (std::size_t j = i + 1; j < aps.size(); ++j) {
      const double d = distance(*aps[i], *aps[j]);
      if (d <= s.interference_radii.ap_ap) {
        edges.push_back({{NodeKind::ap, aps[i]->id}, {NodeKind::ap, aps[j]->id}, d});
      }
    }
  }

  for (const Node* ap : aps) {
    for (const Node* wd : wds) {
      if (assoc.at(wd->id) == ap->id) continue;  // a device never interferes with its own ap
      const double d = distance(*ap, *wd);
      if (d <= s.interference_radii.ap_wd) {
        edges.push_back({{NodeKind::ap, ap->id}, {NodeKind::wd, wd->id}, d});
      }
    }
  }

  for (std::size_t i = 0; i < wds.size(); ++i) {
    for (std::size_t j = i + 1; j < wds.size(); ++j) {
      if (assoc.at(wds[i]->id) == assoc.at(wds[j]->id)) continue;  // coordinated, no edge
      const double d = distance(*wds[i], *wds[j]);
      if (d <= s.interference_radii.wd_wd) {
        edges.push_back({{NodeKind::wd, wds[i]->id}, {NodeKind::wd, wds[j]->id}, d});
      }
    }
  }

  std::sort(edges.begin(), edges.end(), [](const InterferenceEdge& a, const InterferenceEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return edges;
}

NetworkGraph build_graph(const Scenario& s) {
  if (auto violations = validate_scenario(s); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }

  NetworkGraph g;
  for (const Node& ap : s.aps) g.ap_ids.push_back(ap.id);
  for (const Node& wd : s.wds) g.wd_ids.push_back(wd.id);
  std::sort(g.ap_ids.begin(), g.ap_ids.end());
  std::sort(g.wd_ids.begin(), g.wd_ids.end());

  g.association = associate(s);
  g.interference_edges = build_interference_edges(s, g.association_map());
  return g;
}

std::string graph_to_json(const NetworkGraph& g) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["aps"] = g.ap_ids;
  j["wds"] = g.wd_ids;
  auto& assoc = j["association"] = nlohmann::ordered_json::array();
  for (const AssociationEdge& e : g.association) {
    assoc.push_back({{"wd", e.wd}, {"ap", e.ap}, {"distance_m", e.distance_m}});
  }
  auto& edges = j["interference"] = nlohmann::ordered_json::array();
  for (const InterferenceEdge& e : g.interference_edges) {
    edges.push_back({{"u_kind", to_string(e.u.kind)},
                     {"u", e.u.id},
                     {"v_kind", to_string(e.v.kind)},
                     {"v", e.v.id},
                     {"distance_m", e.distance_m}});
  }
  return j.dump(2) + "\n";
}

void save_graph_json(const std::filesystem::path& path, const NetworkGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path.string());
  out << graph_to_json(g);
}

}  // namespace wifiplan
