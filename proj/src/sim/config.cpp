#include "certibus/sim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace certibus::sim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double d = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value for " + key + ": " + value);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value for " + key + ": " + value);
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

SimConfig parse_config_text(const std::string& text, SimConfig base) {
    SimConfig cfg = base;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "duration") cfg.duration = parse_double(key, value);
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "trials") cfg.trials = static_cast<unsigned>(parse_u64(key, value));
        else if (key == "maneuver") cfg.maneuver = value;
        else if (key == "schedule") cfg.schedule = value;
        else if (key == "beta") cfg.beta = parse_double(key, value);
        else if (key == "k_poll") cfg.k_poll = static_cast<unsigned>(parse_u64(key, value));
        else if (key == "noise_accel") cfg.noise.accel_g = parse_double(key, value);
        else if (key == "noise_gyro") cfg.noise.gyro_dps = parse_double(key, value);
        else if (key == "noise_mag") cfg.noise.mag_gauss = parse_double(key, value);
        else if (key == "kp_rp") cfg.gains.kp_rp = parse_double(key, value);
        else if (key == "kd_rp") cfg.gains.kd_rp = parse_double(key, value);
        else if (key == "kp_yaw") cfg.gains.kp_yaw = parse_double(key, value);
        else if (key == "kd_yaw") cfg.gains.kd_yaw = parse_double(key, value);
        else if (key == "inertia_x") cfg.inertia.x = parse_double(key, value);
        else if (key == "inertia_y") cfg.inertia.y = parse_double(key, value);
        else if (key == "inertia_z") cfg.inertia.z = parse_double(key, value);
        else throw std::invalid_argument("unknown config key: " + key);
    }
    if (cfg.maneuver != "maneuver" && cfg.maneuver != "hover") {
        throw std::invalid_argument("unknown maneuver script: " + cfg.maneuver);
    }
    if (cfg.schedule != "default" && cfg.schedule != "none") {
        throw std::invalid_argument("unknown schedule: " + cfg.schedule);
    }
    return cfg;
}

SimConfig load_config_file(const std::string& path, SimConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config_text(text, base);
}

std::string config_to_text(const SimConfig& cfg) {
    std::string out;
    out += "duration = " + format_double(cfg.duration) + "\n";
    out += "seed = " + std::to_string(cfg.seed) + "\n";
    out += "trials = " + std::to_string(cfg.trials) + "\n";
    out += "maneuver = " + cfg.maneuver + "\n";
    out += "schedule = " + cfg.schedule + "\n";
    out += "beta = " + format_double(cfg.beta) + "\n";
    out += "k_poll = " + std::to_string(cfg.k_poll) + "\n";
    out += "noise_accel = " + format_double(cfg.noise.accel_g) + "\n";
    out += "noise_gyro = " + format_double(cfg.noise.gyro_dps) + "\n";
    out += "noise_mag = " + format_double(cfg.noise.mag_gauss) + "\n";
    out += "kp_rp = " + format_double(cfg.gains.kp_rp) + "\n";
    out += "kd_rp = " + format_double(cfg.gains.kd_rp) + "\n";
    out += "kp_yaw = " + format_double(cfg.gains.kp_yaw) + "\n";
    out += "kd_yaw = " + format_double(cfg.gains.kd_yaw) + "\n";
    out += "inertia_x = " + format_double(cfg.inertia.x) + "\n";
    out += "inertia_y = " + format_double(cfg.inertia.y) + "\n";
    out += "inertia_z = " + format_double(cfg.inertia.z) + "\n";
    return out;
}

}  // namespace certibus::sim
