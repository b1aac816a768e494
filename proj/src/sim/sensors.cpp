#include "certibus/sim/sensors.hpp"

#include <algorithm>
#include <cmath>

#include "certibus/driver/ops.hpp"

namespace certibus::sim {

std::int32_t quantize(double value, const SensorChannel& channel) {
    const double clamped = std::clamp(value, -channel.range, channel.range);
    const long counts = std::lround(clamped * channel.sensitivity);
    return static_cast<std::int32_t>(std::clamp<long>(counts, -32768, 32767));
}

Vec3 true_specific_force_g(const Quat& attitude) {
    return rotate_inverse(attitude, Vec3{0, 0, 1});
}

Vec3 true_body_rates_dps(const Vec3& angular_velocity_rad) {
    return {rad_to_deg(angular_velocity_rad.x), rad_to_deg(angular_velocity_rad.y),
            rad_to_deg(angular_velocity_rad.z)};
}

Vec3 true_body_field_gauss(const Quat& attitude, const Vec3& earth_field) {
    return rotate_inverse(attitude, earth_field);
}

ImuCounts sample_imu_counts(const FlightState& state, const SensorConfig& cfg,
                            const SensorNoise& noise, Rng& rng) {
    Vec3 rates = true_body_rates_dps(state.angular_velocity);
    Vec3 force = true_specific_force_g(state.attitude);
    if (noise.gyro_dps > 0) {
        rates.x += noise.gyro_dps * rng.gaussian();
        rates.y += noise.gyro_dps * rng.gaussian();
        rates.z += noise.gyro_dps * rng.gaussian();
    }
    if (noise.accel_g > 0) {
        force.x += noise.accel_g * rng.gaussian();
        force.y += noise.accel_g * rng.gaussian();
        force.z += noise.accel_g * rng.gaussian();
    }
    ImuCounts counts;
    counts.gyro = {quantize(rates.x, cfg.gyro), quantize(rates.y, cfg.gyro),
                   quantize(rates.z, cfg.gyro)};
    counts.accel = {quantize(force.x, cfg.accel), quantize(force.y, cfg.accel),
                    quantize(force.z, cfg.accel)};
    return counts;
}

std::array<std::int32_t, 3> sample_mag_counts(const FlightState& state, const SensorConfig& cfg,
                                              const SensorNoise& noise, Rng& rng) {
    Vec3 field = true_body_field_gauss(state.attitude);
    if (noise.mag_gauss > 0) {
        field.x += noise.mag_gauss * rng.gaussian();
        field.y += noise.mag_gauss * rng.gaussian();
        field.z += noise.mag_gauss * rng.gaussian();
    }
    return {quantize(field.x, cfg.mag), quantize(field.y, cfg.mag), quantize(field.z, cfg.mag)};
}

void append_imu_events(bus::SpiEventList& env, const ImuCounts& counts) {
    auto push_axis = [&env](std::int32_t count) {
        env.push_back(bus::SpiEvent::recv(driver::pack_count(count)));
        env.push_back(bus::SpiEvent::null());
        env.push_back(bus::SpiEvent::null());
        env.push_back(bus::SpiEvent::null());
    };
    for (std::int32_t c : counts.gyro) push_axis(c);
    for (std::int32_t c : counts.accel) push_axis(c);
}

void append_mag_events(bus::I2cEventList& env, const std::array<std::int32_t, 3>& counts) {
    env.push_back(bus::I2cEvent::ack());
    env.push_back(bus::I2cEvent::ack());
    for (std::int32_t c : counts) {
        env.push_back(bus::I2cEvent::recv(driver::pack_count(c)));
    }
}

}  // namespace certibus::sim
