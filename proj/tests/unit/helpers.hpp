#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "wifiplan/types.hpp"

namespace testutil {

// Overlap fraction of two rectangular spectral masks of width `bandwidth`
// MHz whose centers sit on a `spacing` MHz grid, computed as the length of
// the interval intersection. Independent oracle for the bundled matrix.
inline double mask_overlap_fraction(int ci, int cj, double spacing = 5.0,
                                    double bandwidth = 22.0) {
  const double center_i = spacing * ci;
  const double center_j = spacing * cj;
  const double lo = std::max(center_i - bandwidth / 2, center_j - bandwidth / 2);
  const double hi = std::min(center_i + bandwidth / 2, center_j + bandwidth / 2);
  return std::max(0.0, hi - lo) / bandwidth;
}

inline wifiplan::Scenario make_scenario(std::vector<wifiplan::Node> aps,
                                        std::vector<wifiplan::Node> wds,
                                        wifiplan::InterferenceRadii radii,
                                        double width = 100.0, double height = 100.0) {
  wifiplan::Scenario s;
  s.width_m = width;
  s.height_m = height;
  s.aps = std::move(aps);
  s.wds = std::move(wds);
  s.interference_radii = radii;
  return s;
}

// The two-group toy: a serves w1, b serves w2, and the interference edges
// are exactly {(a,b), (b,w1), (w1,w2)}.
inline wifiplan::Scenario two_group_toy() {
  auto s = make_scenario({{"a", 0, 0}, {"b", 10, 0}},
                         {{"w1", 4, 0}, {"w2", 10, 1}},
                         {10.0, 6.0, 7.0});
  return s;
}

struct OracleEdge {
  std::string u_kind;
  std::string u;
  std::string v_kind;
  std::string v;

  bool operator<(const OracleEdge& o) const {
    return std::tie(u_kind, u, v_kind, v) < std::tie(o.u_kind, o.u, o.v_kind, o.v);
  }
  bool operator==(const OracleEdge& o) const = default;
};

// From-scratch re-derivation of association and interference edges by
// scanning every pair of the raw scenario (no sorting tricks, no sharing
// with the implementation).
inline std::map<std::string, std::string> oracle_association(const wifiplan::Scenario& s) {
  std::map<std::string, std::string> assoc;
  for (const auto& wd : s.wds) {
    std::string best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& ap : s.aps) {
      const double d = std::hypot(wd.x - ap.x, wd.y - ap.y);
      if (d < best_d || (d == best_d && ap.id < best)) {
        best = ap.id;
        best_d = d;
      }
    }
    assoc[wd.id] = best;
  }
  return assoc;
}

inline std::set<OracleEdge> oracle_interference_edges(const wifiplan::Scenario& s) {
  const auto assoc = oracle_association(s);
  std::set<OracleEdge> edges;
  const auto add = [&edges](std::string ka, std::string a, std::string kb, std::string b) {
    OracleEdge e{std::move(ka), std::move(a), std::move(kb), std::move(b)};
    OracleEdge r{e.v_kind, e.v, e.u_kind, e.u};
    edges.insert(std::min(e, r));
  };
  for (const auto& p : s.aps) {
    for (const auto& q : s.aps) {
      if (p.id >= q.id) continue;
      if (std::hypot(p.x - q.x, p.y - q.y) <= s.interference_radii.ap_ap) {
        add("ap", p.id, "ap", q.id);
      }
    }
  }
  for (const auto& ap : s.aps) {
    for (const auto& wd : s.wds) {
      if (assoc.at(wd.id) == ap.id) continue;
      if (std::hypot(ap.x - wd.x, ap.y - wd.y) <= s.interference_radii.ap_wd) {
        add("ap", ap.id, "wd", wd.id);
      }
    }
  }
  for (const auto& p : s.wds) {
    for (const auto& q : s.wds) {
      if (p.id >= q.id) continue;
      if (assoc.at(p.id) == assoc.at(q.id)) continue;
      if (std::hypot(p.x - q.x, p.y - q.y) <= s.interference_radii.wd_wd) {
        add("wd", p.id, "wd", q.id);
      }
    }
  }
  return edges;
}

}  // namespace testutil
