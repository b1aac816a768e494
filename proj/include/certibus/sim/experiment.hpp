#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "certibus/driver/ops.hpp"
#include "certibus/sim/config.hpp"
#include "certibus/sim/schedule.hpp"

namespace certibus::sim {

using driver::Variant;

/// Setpoint scripts. "maneuver" flies slow roll/pitch/yaw sinusoids from a
/// level start; "hover" holds zero setpoints from a small initial tilt.
Vec3 setpoint_rpy_rad(const std::string& maneuver, double t);
/// Time derivative of the setpoint script (rad/s), fed to the controller's
/// damping term as the desired rate.
Vec3 setpoint_rate_rpy_rad(const std::string& maneuver, double t);
Quat initial_attitude(const std::string& maneuver);

struct TraceRow {
    double t{0};
    double roll_des{0}, pitch_des{0}, yaw_des{0};  // degrees
    double roll{0}, pitch{0}, yaw{0};              // degrees, actual attitude
    bool stale{false};
    bool fault{false};
};

/// Per-tick record of one run, plus diagnostics the CSV does not carry.
struct AttitudeTrace {
    double dt{0.005};
    std::vector<TraceRow> rows;
    std::vector<Vec3> torques;                // torque applied during each tick
    std::vector<std::uint8_t> controller_ran;  // 1 when the control law executed
};

/// Run the 200 Hz control loop for the configured duration. Fault windows
/// starve the SPI event stream for the block duration: the unverified
/// variant's transfer blocks (controller frozen for the window), the
/// verified variant times out within the poll budget, flags the sample
/// stale, and keeps the loop running on the last sample.
AttitudeTrace run_experiment(const SimConfig& cfg, Variant variant, const FaultSchedule& schedule,
                             std::uint64_t seed);

/// CSV with header t,roll_des,pitch_des,yaw_des,roll,pitch,yaw,stale,fault.
std::string trace_to_csv(const AttitudeTrace& trace);

struct AxisMetrics {
    double rms{0};
    double peak{0};
    double window_mean{0};   // mean |error| inside fault windows (+tail)
    double outside_mean{0};  // mean |error| outside
    double outside_rms{0};
    double window_peak{0};
    double window_ratio{0};  // window_mean / outside_mean (0/0 -> 0)
};

struct Metrics {
    AxisMetrics roll, pitch, yaw;
    std::uint64_t window_ticks{0};
    std::uint64_t outside_ticks{0};
};

/// Aggregate a trace. The fault window tail is 0.5 s. Throws
/// std::invalid_argument on an empty trace.
Metrics compute_metrics(const AttitudeTrace& trace);

std::string metrics_to_kv(const Metrics& m);
std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& label, const Metrics& m);

}  // namespace certibus::sim
