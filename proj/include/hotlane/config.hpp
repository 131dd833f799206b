#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hotlane/analysis.hpp"
#include "hotlane/bathtub.hpp"
#include "hotlane/controller.hpp"
#include "hotlane/demand.hpp"
#include "hotlane/lane_choice.hpp"
#include "hotlane/nfd.hpp"

namespace hotlane {

enum class Mode { Hot, Hov };

struct ScenarioConfig {
    std::string name = "custom";
    Mode mode = Mode::Hot;
    FdParams fd_hot;
    FdParams fd_gp;
    CorridorGeometry geometry;
    DemandProfile demand = DemandProfile::constant({});
    ChoiceModel choice = ChoiceModel::logit({});
    ControllerState controller;
    TollSettings toll;
    int controller_every_steps = 1;  // integrate a, b every N Euler steps with N dt
    double delta1_0 = 0.0;
    double delta2_0 = 0.0;
    double dt = 0.1 / 3600.0;  // [h]
    double horizon = 5.0;      // [h]
    int output_every_steps = 10;
    JamClamp jam_clamp = JamClamp::Auto;
    // filled by validation, e.g. A1 failing at peak demand
    std::vector<std::string> warnings;
    // merged document the config was built from
    nlohmann::json source;

    long total_steps() const;
};

/// Names accepted by the "preset" key.
std::vector<std::string> preset_names();

/// Full JSON document for a named preset. Throws ConfigError for unknown names.
nlohmann::json preset_json(const std::string& name);

/// A document may name a preset and override any subset of its keys
/// (RFC 7386 merge). Without "preset" every key must be present.
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::string& path);
ScenarioConfig preset_config(const std::string& name);

}  // namespace hotlane
