#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wifiplan {

/// Shared physical-layer parameters. Units are dBm/dB for powers and
/// gains, meters for antenna heights.
struct RadioParams {
  double tx_power_dbm = 20.0;
  double tx_gain_db = 0.0;
  double rx_gain_db = 0.0;
  double obstacle_loss_db = 0.0;
  double activity_index_db = 0.0;  // airtime factor, <= 0 for fractional activity
  double tx_height_m = 1.5;
  double rx_height_m = 1.5;
  double sinr_min_db = 0.0;   // utility 0 at or below
  double sinr_max_db = 30.0;  // utility 1 at or above
};

/// Interference ranges per endpoint-type pair, in meters. A pair of nodes
/// can only interfere when their distance is within the radius for their
/// type combination. The defaults keep the interference graph to pairs
/// whose contribution is non-negligible under the distance^4 propagation
/// model; measured ranges can be substituted per scenario.
struct InterferenceRadii {
  double ap_ap = 35.0;
  double ap_wd = 30.0;
  double wd_wd = 25.0;
};

struct Node {
  std::string id;
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Node& a, const Node& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// The physical world: a rectangular area with access points and wireless
/// devices at fixed positions, one shared radio configuration, and the
/// channel count of the spectrum.
struct Scenario {
  double width_m = 100.0;
  double height_m = 100.0;
  std::vector<Node> aps;
  std::vector<Node> wds;
  RadioParams radio;
  InterferenceRadii interference_radii;
  int spectrum_size = 11;  // channels are 1..spectrum_size
};

/// Channel index per access point id. Wireless devices carry no channel of
/// their own; they always use their associated access point's channel.
using Coloring = std::map<std::string, int>;

/// Checks every scenario invariant and returns one message per violation.
/// An empty result means the scenario is well formed. Violations are data,
/// not exceptions: callers decide how to react.
std::vector<std::string> validate_scenario(const Scenario& s);

/// True when every access point of `s` has exactly one channel in
/// [1, s.spectrum_size] and no unknown ids appear.
bool is_total_coloring(const Scenario& s, const Coloring& c);

/// Thrown by operations whose precondition is a valid scenario.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace wifiplan
