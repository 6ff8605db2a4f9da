#include "wifiplan/contraction.hpp"

#include <fstream>
#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace wifiplan {

std::string to_string(ContractionMode mode) {
  return mode == ContractionMode::uniform ? "uniform" : "weighted";
}

ContractedGraph contract(const NetworkGraph& g, ContractionMode mode) {
  const std::map<std::string, std::string> assoc = g.association_map();

  const auto group_of = [&assoc](const NodeRef& ref) -> const std::string& {
    if (ref.kind == NodeKind::ap) return ref.id;
    auto it = assoc.find(ref.id);
    if (it == assoc.end()) {
      throw std::invalid_argument("interference edge endpoint '" + ref.id +
                                  "' has no association");
    }
    return it->second;
  };

  ContractedGraph cg;
  cg.ap_vertices = g.ap_ids;

  std::map<std::pair<std::string, std::string>, std::int64_t> merged;
  for (const InterferenceEdge& e : g.interference_edges) {
    const std::string& a = group_of(e.u);
    const std::string& b = group_of(e.v);
    if (a == b) {
      ++cg.dropped_self_loops;
      continue;
    }
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    ++merged[std::move(key)];
  }

  cg.edges.reserve(merged.size());
  for (const auto& [key, count] : merged) {
    cg.edges.push_back({key.first, key.second,
                        mode == ContractionMode::weighted ? count : std::int64_t{1}});
  }
  return cg;
}

std::string contracted_to_json(const ContractedGraph& cg, ContractionMode mode) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["mode"] = to_string(mode);
  j["aps"] = cg.ap_vertices;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const ContractedEdge& e : cg.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  }
  j["dropped_self_loops"] = cg.dropped_self_loops;
  return j.dump(2) + "\n";
}

void save_contracted_json(const std::filesystem::path& path, const ContractedGraph& cg,
                          ContractionMode mode) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write contracted graph file: " + path.string());
  out << contracted_to_json(cg, mode);
}

}  // namespace wifiplan
