#include "certibus/sim/controller.hpp"

namespace certibus::sim {

Vec3 controller_update(const Vec3& estimate_rpy, const Vec3& setpoint_rpy, const Vec3& rates,
                       const ControllerGains& gains, const Vec3& inertia) {
    const double e_roll = wrap_angle(setpoint_rpy.x - estimate_rpy.x);
    const double e_pitch = wrap_angle(setpoint_rpy.y - estimate_rpy.y);
    const double e_yaw = wrap_angle(setpoint_rpy.z - estimate_rpy.z);
    return {
        inertia.x * (gains.kp_rp * e_roll - gains.kd_rp * rates.x),
        inertia.y * (gains.kp_rp * e_pitch - gains.kd_rp * rates.y),
        inertia.z * (gains.kp_yaw * e_yaw - gains.kd_yaw * rates.z),
    };
}

}  // namespace certibus::sim
