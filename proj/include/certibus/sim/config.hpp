#pragma once

#include <cstdint>
#include <string>

#include "certibus/sim/controller.hpp"
#include "certibus/sim/sensors.hpp"

namespace certibus::sim {

/// Experiment configuration. Field defaults are the shipped experiment
/// profile; a key = value config file overrides them. Unknown keys are
/// rejected.
struct SimConfig {
    double duration{40.0};
    std::uint64_t seed{1};
    unsigned trials{10};
    std::string maneuver{"maneuver"};  // "maneuver" or "hover"
    std::string schedule{"default"};   // "default" or "none"
    double beta{0.1};
    unsigned k_poll{16};
    SensorNoise noise;
    ControllerGains gains;
    Vec3 inertia{0.01, 0.01, 0.018};
    SensorConfig sensors;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Parse `key = value` lines ('#' starts a comment). Throws
/// std::invalid_argument on unknown keys or malformed values.
SimConfig parse_config_text(const std::string& text, SimConfig base = {});
SimConfig load_config_file(const std::string& path, SimConfig base = {});

std::string config_to_text(const SimConfig& cfg);

}  // namespace certibus::sim
