#pragma once

#include "certibus/sim/math3d.hpp"

namespace certibus::sim {

/// Rigid-body attitude state: unit quaternion, body rates, simulated time.
struct FlightState {
    Quat attitude;
    Vec3 angular_velocity;  // rad/s, body frame
    double time{0};

    friend bool operator==(const FlightState&, const FlightState&) = default;
};

/// One explicit-Euler step of the attitude kinematics with diagonal
/// inertia: omega' = omega + dt * I^-1 (tau - omega x I omega), the
/// quaternion advanced by its rate and renormalized.
/// Throws std::invalid_argument on dt <= 0 or non-finite torque.
FlightState step_dynamics(const FlightState& state, const Vec3& torque, double dt,
                          const Vec3& inertia);

}  // namespace certibus::sim
