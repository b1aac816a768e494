#pragma once

#include <array>
#include <cstdint>

#include "certibus/bus/events.hpp"
#include "certibus/sim/dynamics.hpp"
#include "certibus/sim/rng.hpp"

namespace certibus::sim {

/// One sensor channel: measurement range in physical units, counts per
/// unit, and sampling rate.
struct SensorChannel {
    double range;
    double sensitivity;
    double rate_hz;
};

/// The drone's three sensors. Accelerometer and gyroscope ride the SPI bus
/// at 200 Hz, the magnetometer the I2C bus at 75 Hz.
struct SensorConfig {
    SensorChannel accel{8.0, 4096.0, 200.0};     // g, LSB/g
    SensorChannel gyro{1000.0, 32.8, 200.0};     // dps, LSB/dps
    SensorChannel mag{1.3, 1090.0, 75.0};        // gauss, LSB/gauss
};

struct SensorNoise {
    double accel_g{0};
    double gyro_dps{0};
    double mag_gauss{0};
};

/// Earth magnetic field in the world frame (gauss): horizontal component
/// along +x, downward dip along -z.
inline constexpr Vec3 kEarthFieldGauss{0.42, 0.0, -0.31};

/// Physical value -> saturated, quantized raw count. The value clamps to
/// the channel range, then rounds to counts; counts clamp to the 16-bit
/// two's-complement range.
std::int32_t quantize(double value, const SensorChannel& channel);

// True sensor readings in physical units, derived from the flight state.
// The accelerometer measures specific force in g (at rest: +1 g up the
// body z axis); the magnetometer measures the earth field in body frame.
Vec3 true_specific_force_g(const Quat& attitude);
Vec3 true_body_rates_dps(const Vec3& angular_velocity_rad);
Vec3 true_body_field_gauss(const Quat& attitude, const Vec3& earth_field = kEarthFieldGauss);

struct ImuCounts {
    std::array<std::int32_t, 3> gyro{};
    std::array<std::int32_t, 3> accel{};
};

ImuCounts sample_imu_counts(const FlightState& state, const SensorConfig& cfg,
                            const SensorNoise& noise, Rng& rng);
std::array<std::int32_t, 3> sample_mag_counts(const FlightState& state, const SensorConfig& cfg,
                                              const SensorNoise& noise, Rng& rng);

/// Append the bus events one IMU sample produces: per axis (gyro x/y/z,
/// accel x/y/z) the data event followed by the three null slots the
/// driver's transfer consumes.
void append_imu_events(bus::SpiEventList& env, const ImuCounts& counts);

/// Append the bus events one magnetometer sample produces: two
/// acknowledgments for the addressing writes, then the three axis values.
void append_mag_events(bus::I2cEventList& env, const std::array<std::int32_t, 3>& counts);

}  // namespace certibus::sim
