#include "certibus/sim/fusion.hpp"

#include <cmath>

namespace certibus::sim {

namespace {

// R(q)^T r without normalizing q: the body-frame image of a world-frame
// reference under the raw quadratic form.
Vec3 body_image(const Quat& q, const Vec3& r) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    return {
        (1 - 2 * (y * y + z * z)) * r.x + 2 * (x * y + w * z) * r.y + 2 * (x * z - w * y) * r.z,
        2 * (x * y - w * z) * r.x + (1 - 2 * (x * x + z * z)) * r.y + 2 * (y * z + w * x) * r.z,
        2 * (x * z + w * y) * r.x + 2 * (y * z - w * x) * r.y + (1 - 2 * (x * x + y * y)) * r.z,
    };
}

// Partial derivatives of body_image(q, r) w.r.t. (w, x, y, z): one Vec3 per
// quaternion component.
std::array<Vec3, 4> body_image_jacobian(const Quat& q, const Vec3& r) {
    const double w = q.w, x = q.x, y = q.y, z = q.z;
    const Vec3 dw{2 * z * r.y - 2 * y * r.z,
                  -2 * z * r.x + 2 * x * r.z,
                  2 * y * r.x - 2 * x * r.y};
    const Vec3 dx{2 * y * r.y + 2 * z * r.z,
                  2 * y * r.x - 4 * x * r.y + 2 * w * r.z,
                  2 * z * r.x - 2 * w * r.y - 4 * x * r.z};
    const Vec3 dy{-4 * y * r.x + 2 * x * r.y - 2 * w * r.z,
                  2 * x * r.x + 2 * z * r.z,
                  2 * w * r.x + 2 * z * r.y - 4 * y * r.z};
    const Vec3 dz{-4 * z * r.x + 2 * w * r.y + 2 * x * r.z,
                  -2 * w * r.x - 4 * z * r.y + 2 * y * r.z,
                  2 * x * r.x + 2 * y * r.y};
    return {dw, dx, dy, dz};
}

constexpr Vec3 kGravityRef{0, 0, 1};

}  // namespace

std::array<double, 6> fusion_residual(const Quat& q, const Vec3& accel_unit,
                                      const std::optional<Vec3>& field_ref,
                                      const std::optional<Vec3>& mag_unit) {
    std::array<double, 6> f{};
    const Vec3 g = body_image(q, kGravityRef) - accel_unit;
    f[0] = g.x;
    f[1] = g.y;
    f[2] = g.z;
    if (field_ref && mag_unit) {
        const Vec3 b = body_image(q, *field_ref) - *mag_unit;
        f[3] = b.x;
        f[4] = b.y;
        f[5] = b.z;
    }
    return f;
}

std::array<double, 4> fusion_gradient(const Quat& q, const Vec3& accel_unit,
                                      const std::optional<Vec3>& field_ref,
                                      const std::optional<Vec3>& mag_unit) {
    std::array<double, 4> grad{};
    {
        const Vec3 fg = body_image(q, kGravityRef) - accel_unit;
        const auto jac = body_image_jacobian(q, kGravityRef);
        for (std::size_t j = 0; j < 4; ++j) grad[j] += dot(jac[j], fg);
    }
    if (field_ref && mag_unit) {
        const Vec3 fb = body_image(q, *field_ref) - *mag_unit;
        const auto jac = body_image_jacobian(q, *field_ref);
        for (std::size_t j = 0; j < 4; ++j) grad[j] += dot(jac[j], fb);
    }
    return grad;
}

FuseResult fuse_attitude(const Quat& q, const Vec3& gyro_rad, const Vec3& accel,
                         const std::optional<Vec3>& mag, double beta, double dt) {
    Quat qdot = q * Quat{0, 0.5 * gyro_rad.x, 0.5 * gyro_rad.y, 0.5 * gyro_rad.z};
    bool corrected = false;

    const double accel_norm = norm(accel);
    if (accel_norm > 0.0) {
        corrected = true;
        const Vec3 a_unit = (1.0 / accel_norm) * accel;

        std::optional<Vec3> field_ref;
        std::optional<Vec3> mag_unit;
        if (mag) {
            const double mag_norm = norm(*mag);
            if (mag_norm > 0.0) {
                mag_unit = (1.0 / mag_norm) * *mag;
                // Heading-only reference: project the measured field into
                // the world frame and keep its horizontal magnitude and dip.
                const Vec3 h = rotate(q, *mag_unit);
                field_ref = Vec3{std::sqrt(h.x * h.x + h.y * h.y), 0.0, h.z};
            }
        }

        const auto grad = fusion_gradient(q, a_unit, field_ref, mag_unit);
        const double gn = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2] +
                                    grad[3] * grad[3]);
        if (gn > 0.0) {
            qdot.w -= beta * grad[0] / gn;
            qdot.x -= beta * grad[1] / gn;
            qdot.y -= beta * grad[2] / gn;
            qdot.z -= beta * grad[3] / gn;
        }
    }

    const Quat next{q.w + dt * qdot.w, q.x + dt * qdot.x, q.y + dt * qdot.y, q.z + dt * qdot.z};
    return {normalized(next), corrected};
}

}  // namespace certibus::sim
