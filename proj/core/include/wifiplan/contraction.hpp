#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wifiplan/network_graph.hpp"

namespace wifiplan {

enum class ContractionMode { uniform, weighted };

std::string to_string(ContractionMode mode);

struct ContractedEdge {
  std::string u;  // canonical: u < v
  std::string v;
  std::int64_t weight = 1;
};

/// Access-point-only simple graph obtained by merging every access point
/// with its associated wireless devices. In weighted mode an edge counts
/// the interference edges collapsed onto it; in uniform mode all weights
/// are 1.
struct ContractedGraph {
  std::vector<std::string> ap_vertices;  // ascending, always |V_AP| entries
  std::vector<ContractedEdge> edges;     // sorted by (u, v)
  // Intra-group interference edges cannot come out of build_graph, but
  // hand-edited graph files may contain them; they are dropped and counted
  // here instead of becoming self-loops.
  std::size_t dropped_self_loops = 0;
};

ContractedGraph contract(const NetworkGraph& g, ContractionMode mode);

std::string contracted_to_json(const ContractedGraph& cg, ContractionMode mode);
void save_contracted_json(const std::filesystem::path& path, const ContractedGraph& cg,
                          ContractionMode mode);

}  // namespace wifiplan
