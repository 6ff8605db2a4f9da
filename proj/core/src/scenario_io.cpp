#include "wifiplan/scenario_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace wifiplan {

namespace {

std::vector<Node> nodes_from_json(const nlohmann::json& arr) {
  std::vector<Node> nodes;
  for (const auto& n : arr) {
    nodes.push_back({n.at("id").get<std::string>(), n.at("x").get<double>(),
                     n.at("y").get<double>()});
  }
  return nodes;
}

nlohmann::ordered_json nodes_to_json(const std::vector<Node>& nodes) {
  auto arr = nlohmann::ordered_json::array();
  for (const Node& n : nodes) arr.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}});
  return arr;
}

}  // namespace

Scenario scenario_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  if (j.value("format", 0) != 1) {
    throw std::runtime_error("unsupported scenario format (expected \"format\": 1)");
  }

  Scenario s;
  s.width_m = j.at("width_m").get<double>();
  s.height_m = j.at("height_m").get<double>();
  s.spectrum_size = j.at("spectrum_size").get<int>();

  const auto& radio = j.at("radio");
  s.radio.tx_power_dbm = radio.at("tx_power_dbm").get<double>();
  s.radio.tx_gain_db = radio.at("tx_gain_db").get<double>();
  s.radio.rx_gain_db = radio.at("rx_gain_db").get<double>();
  s.radio.obstacle_loss_db = radio.at("obstacle_loss_db").get<double>();
  s.radio.activity_index_db = radio.at("activity_index_db").get<double>();
  s.radio.tx_height_m = radio.at("tx_height_m").get<double>();
  s.radio.rx_height_m = radio.at("rx_height_m").get<double>();
  s.radio.sinr_min_db = radio.at("sinr_min_db").get<double>();
  s.radio.sinr_max_db = radio.at("sinr_max_db").get<double>();

  const auto& radii = j.at("interference_radii");
  s.interference_radii.ap_ap = radii.at("ap_ap").get<double>();
  s.interference_radii.ap_wd = radii.at("ap_wd").get<double>();
  s.interference_radii.wd_wd = radii.at("wd_wd").get<double>();

  s.aps = nodes_from_json(j.at("aps"));
  s.wds = nodes_from_json(j.at("wds"));
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["width_m"] = s.width_m;
  j["height_m"] = s.height_m;
  j["spectrum_size"] = s.spectrum_size;
  j["radio"] = {{"tx_power_dbm", s.radio.tx_power_dbm},
                {"tx_gain_db", s.radio.tx_gain_db},
                {"rx_gain_db", s.radio.rx_gain_db},
                {"obstacle_loss_db", s.radio.obstacle_loss_db},
                {"activity_index_db", s.radio.activity_index_db},
                {"tx_height_m", s.radio.tx_height_m},
                {"rx_height_m", s.radio.rx_height_m},
                {"sinr_min_db", s.radio.sinr_min_db},
                {"sinr_max_db", s.radio.sinr_max_db}};
  j["interference_radii"] = {{"ap_ap", s.interference_radii.ap_ap},
                             {"ap_wd", s.interference_radii.ap_wd},
                             {"wd_wd", s.interference_radii.wd_wd}};
  j["aps"] = nodes_to_json(s.aps);
  j["wds"] = nodes_to_json(s.wds);
  return j.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scenario_from_json(text);
}

void save_scenario(const std::filesystem::path& path, const Scenario& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file: " + path.string());
  out << scenario_to_json(s);
}

}  // namespace wifiplan
