#pragma once

#include <array>
#include <optional>

#include "certibus/sim/math3d.hpp"

namespace certibus::sim {

/// Residual of the orientation objective at q: the reference directions
/// rotated into the body frame minus the (unit) measurements. Three gravity
/// rows, and three field rows when a field reference is given. The rotation
/// uses the raw quadratic form in q, so the residual is defined (and
/// differentiable) off the unit sphere too.
std::array<double, 6> fusion_residual(const Quat& q, const Vec3& accel_unit,
                                      const std::optional<Vec3>& field_ref,
                                      const std::optional<Vec3>& mag_unit);

/// Analytic gradient (Jacobian-transpose form) of F(q) = 1/2 |f(q)|^2.
std::array<double, 4> fusion_gradient(const Quat& q, const Vec3& accel_unit,
                                      const std::optional<Vec3>& field_ref,
                                      const std::optional<Vec3>& mag_unit);

struct FuseResult {
    Quat q;
    bool corrected{true};  // false: zero accelerometer vector, gyro-only step
};

/// One step of the gradient-descent orientation filter: the gyro quaternion
/// rate corrected along -beta * grad/|grad|, then renormalized. The
/// magnetometer term joins only when a fresh mag sample is supplied; its
/// field reference is rebuilt from the measurement so only heading
/// information constrains yaw. A zero accelerometer vector skips the
/// correction (pure gyro integration) and clears `corrected`.
FuseResult fuse_attitude(const Quat& q, const Vec3& gyro_rad, const Vec3& accel,
                         const std::optional<Vec3>& mag, double beta, double dt);

}  // namespace certibus::sim
