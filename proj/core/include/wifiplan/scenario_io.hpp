#pragma once

#include <filesystem>
#include <string>

#include "wifiplan/types.hpp"

namespace wifiplan {

/// Scenario JSON, format 1. Field names mirror the Scenario type; see the
/// README for the schema. Unknown keys are ignored on load.
Scenario scenario_from_json(const std::string& json_text);
std::string scenario_to_json(const Scenario& s);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const std::filesystem::path& path, const Scenario& s);

}  // namespace wifiplan
