#include "certibus/sim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace certibus::sim {

FlightState step_dynamics(const FlightState& state, const Vec3& torque, double dt,
                          const Vec3& inertia) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!std::isfinite(torque.x) || !std::isfinite(torque.y) || !std::isfinite(torque.z)) {
        throw std::invalid_argument("non-finite torque");
    }

    const Vec3& w = state.angular_velocity;
    const Vec3 iw{inertia.x * w.x, inertia.y * w.y, inertia.z * w.z};
    const Vec3 rhs = torque - cross(w, iw);
    const Vec3 wdot{rhs.x / inertia.x, rhs.y / inertia.y, rhs.z / inertia.z};

    FlightState next;
    next.angular_velocity = w + dt * wdot;

    const Quat& q = state.attitude;
    const Quat qdot = q * Quat{0, 0.5 * w.x, 0.5 * w.y, 0.5 * w.z};
    next.attitude = normalized(Quat{q.w + dt * qdot.w, q.x + dt * qdot.x, q.y + dt * qdot.y,
                                    q.z + dt * qdot.z});
    next.time = state.time + dt;
    return next;
}

}  // namespace certibus::sim
