#pragma once

#include <cmath>

namespace certibus::sim {

struct Vec3 {
    double x{0}, y{0}, z{0};

    friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Unit quaternion rotating body-frame vectors into the world frame.
struct Quat {
    double w{1}, x{0}, y{0}, z{0};

    friend constexpr bool operator==(const Quat&, const Quat&) = default;
};

constexpr Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline double norm(const Quat& q) { return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z); }

inline Quat normalized(const Quat& q) {
    const double n = norm(q);
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

constexpr Quat conjugate(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Rotate a body-frame vector into the world frame.
inline Vec3 rotate(const Quat& q, const Vec3& v) {
    const Quat r = q * Quat{0, v.x, v.y, v.z} * conjugate(q);
    return {r.x, r.y, r.z};
}

/// Rotate a world-frame vector into the body frame.
inline Vec3 rotate_inverse(const Quat& q, const Vec3& v) { return rotate(conjugate(q), v); }

inline Quat from_axis_angle(const Vec3& axis_unit, double angle) {
    const double h = 0.5 * angle;
    const double s = std::sin(h);
    return {std::cos(h), s * axis_unit.x, s * axis_unit.y, s * axis_unit.z};
}

/// Roll/pitch/yaw (x, y, z) of the body-to-world rotation, in radians.
inline Vec3 to_euler_rpy(const Quat& q) {
    const double roll = std::atan2(2.0 * (q.w * q.x + q.y * q.z),
                                   1.0 - 2.0 * (q.x * q.x + q.y * q.y));
    double sp = 2.0 * (q.w * q.y - q.z * q.x);
    if (sp > 1.0) sp = 1.0;
    if (sp < -1.0) sp = -1.0;
    const double pitch = std::asin(sp);
    const double yaw = std::atan2(2.0 * (q.w * q.z + q.x * q.y),
                                  1.0 - 2.0 * (q.y * q.y + q.z * q.z));
    return {roll, pitch, yaw};
}

inline Quat from_euler_rpy(const Vec3& rpy) {
    const Quat qx = from_axis_angle({1, 0, 0}, rpy.x);
    const Quat qy = from_axis_angle({0, 1, 0}, rpy.y);
    const Quat qz = from_axis_angle({0, 0, 1}, rpy.z);
    return qz * qy * qx;
}

constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }
constexpr double rad_to_deg(double r) { return r * 180.0 / kPi; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

}  // namespace certibus::sim
