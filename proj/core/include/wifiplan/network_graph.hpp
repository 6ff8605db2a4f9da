#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "wifiplan/types.hpp"

namespace wifiplan {

enum class NodeKind { ap, wd };

std::string to_string(NodeKind kind);

/// Typed vertex reference: access point and wireless device ids live in
/// separate namespaces.
struct NodeRef {
  NodeKind kind = NodeKind::ap;
  std::string id;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
  friend bool operator<(const NodeRef& a, const NodeRef& b) {
    return std::tie(a.kind, a.id) < std::tie(b.kind, b.id);
  }
};

struct AssociationEdge {
  std::string wd;
  std::string ap;
  double distance_m = 0.0;
};

struct InterferenceEdge {
  NodeRef u;  // canonical: u < v
  NodeRef v;
  double distance_m = 0.0;
};

/// Two-layer model of a scenario: typed vertices, the association edges
/// (each wireless device to its nearest access point) and the interference
/// edges (pairs within range that are not coordinated by a common access
/// point). All lists are sorted, so equal scenarios build equal graphs.
struct NetworkGraph {
  std::vector<std::string> ap_ids;              // ascending
  std::vector<std::string> wd_ids;              // ascending
  std::vector<AssociationEdge> association;     // sorted by wd id
  std::vector<InterferenceEdge> interference_edges;  // sorted by (u, v)

  std::map<std::string, std::string> association_map() const;
};

/// Maps each wireless device to the access point at minimum Euclidean
/// distance; ties broken by smallest ap id. Throws ValidationError when
/// wireless devices exist but no access point does.
std::vector<AssociationEdge> associate(const Scenario& s);

/// Emits the edge (u, v) iff dist(u, v) is within the radius for the pair
/// type, excluding wireless-device pairs that share an access point and
/// each device's edge to its own access point. `assoc` must be total over
/// the scenario's wireless devices.
std::vector<InterferenceEdge> build_interference_edges(
    const Scenario& s, const std::map<std::string, std::string>& assoc);

/// Validates the scenario (throws ValidationError listing the violations),
/// then composes associate() and build_interference_edges(). Deterministic:
/// byte-identical output for a fixed scenario.
NetworkGraph build_graph(const Scenario& s);

std::string graph_to_json(const NetworkGraph& g);
void save_graph_json(const std::filesystem::path& path, const NetworkGraph& g);

}  // namespace wifiplan
