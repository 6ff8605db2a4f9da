#include "wifiplan/types.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace wifiplan {

namespace {

bool finite(double v) { return std::isfinite(v); }

void check_nodes(const std::vector<Node>& nodes, const char* klass, const Scenario& s,
                 std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const Node& n : nodes) {
    if (!seen.insert(n.id).second) {
      out.push_back(std::string(klass) + ": duplicate id '" + n.id + "'");
    }
    if (!finite(n.x) || !finite(n.y) || n.x < 0.0 || n.x > s.width_m || n.y < 0.0 ||
        n.y > s.height_m) {
      out.push_back(std::string(klass) + " '" + n.id + "': out of bounds");
    }
  }
}

}  // namespace

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> v;

  if (!finite(s.width_m) || s.width_m <= 0.0 || !finite(s.height_m) || s.height_m <= 0.0) {
    v.push_back("scenario dimensions must be positive");
  }
  if (s.spectrum_size < 1) {
    v.push_back("spectrum_size must be >= 1");
  }

  check_nodes(s.aps, "ap", s, v);
  check_nodes(s.wds, "wd", s, v);

  if (s.aps.empty() && !s.wds.empty()) {
    v.push_back("wireless devices present but no access point to associate");
  }

  const InterferenceRadii& r = s.interference_radii;
  if (!finite(r.ap_ap) || r.ap_ap < 0.0) v.push_back("interference radius ap_ap invalid");
  if (!finite(r.ap_wd) || r.ap_wd < 0.0) v.push_back("interference radius ap_wd invalid");
  if (!finite(r.wd_wd) || r.wd_wd < 0.0) v.push_back("interference radius wd_wd invalid");

  const RadioParams& p = s.radio;
  if (!finite(p.tx_height_m) || p.tx_height_m <= 0.0) v.push_back("tx_height_m must be > 0");
  if (!finite(p.rx_height_m) || p.rx_height_m <= 0.0) v.push_back("rx_height_m must be > 0");
  if (!finite(p.sinr_min_db) || !finite(p.sinr_max_db) || p.sinr_min_db >= p.sinr_max_db) {
    v.push_back("sinr_min_db must be < sinr_max_db");
  }
  for (double x : {p.tx_power_dbm, p.tx_gain_db, p.rx_gain_db, p.obstacle_loss_db,
                   p.activity_index_db}) {
    if (!finite(x)) {
      v.push_back("radio parameters must be finite");
      break;
    }
  }

  return v;
}

bool is_total_coloring(const Scenario& s, const Coloring& c) {
  if (c.size() != s.aps.size()) return false;
  for (const Node& ap : s.aps) {
    auto it = c.find(ap.id);
    if (it == c.end() || it->second < 1 || it->second > s.spectrum_size) return false;
  }
  return true;
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error([&violations] {
        std::ostringstream os;
        os << "invalid scenario:";
        for (const std::string& v : violations) os << "\n  - " << v;
        return os.str();
      }()),
      violations_(std::move(violations)) {}

}  // namespace wifiplan
