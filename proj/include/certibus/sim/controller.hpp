#pragma once

#include "certibus/sim/math3d.hpp"

namespace certibus::sim {

/// PD attitude gains. Roll and pitch share one set; yaw is slower.
struct ControllerGains {
    double kp_rp{36.0};
    double kd_rp{9.0};
    double kp_yaw{9.0};
    double kd_yaw{4.5};
};

/// PD attitude control: per-axis torque I * (kp * angle_error - kd * rate),
/// angle errors wrapped to (-pi, pi]. Estimate and setpoint are
/// roll/pitch/yaw in radians; rates are measured body rates in rad/s.
Vec3 controller_update(const Vec3& estimate_rpy, const Vec3& setpoint_rpy, const Vec3& rates,
                       const ControllerGains& gains, const Vec3& inertia);

}  // namespace certibus::sim
