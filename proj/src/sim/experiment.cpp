#include "certibus/sim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "certibus/sim/controller.hpp"
#include "certibus/sim/dynamics.hpp"
#include "certibus/sim/fusion.hpp"
#include "certibus/sim/rng.hpp"
#include "certibus/sim/sensors.hpp"

namespace certibus::sim {

namespace {

constexpr double kDt = 1.0 / 200.0;

// A 75 Hz sample lands in tick k of the 200 Hz loop.
bool is_mag_tick(int k) { return (75 * k) % 200 < 75; }

struct Window {
    int begin;
    int end;
};

std::vector<Window> windows_from_schedule(const FaultSchedule& schedule, int n_ticks) {
    const int block_ticks = static_cast<int>(std::llround(schedule.block_duration / kDt));
    std::vector<Window> windows;
    for (double t : schedule.occurrences) {
        const int begin = static_cast<int>(std::ceil(t / kDt - 1e-9));
        if (begin >= n_ticks) continue;
        windows.push_back({begin, std::min(begin + block_ticks, n_ticks)});
    }
    return windows;
}

std::string format_row(const TraceRow& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%d,%d\n", r.t, r.roll_des,
                  r.pitch_des, r.yaw_des, r.roll, r.pitch, r.yaw, r.stale ? 1 : 0,
                  r.fault ? 1 : 0);
    return buf;
}

std::string format_metric(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

namespace {
constexpr double kRollAmp = 20.0, kRollHz = 0.10;
constexpr double kPitchAmp = 15.0, kPitchHz = 0.12;
constexpr double kYawAmp = 10.0, kYawHz = 0.08;
}  // namespace

Vec3 setpoint_rpy_rad(const std::string& maneuver, double t) {
    if (maneuver == "hover") return {0, 0, 0};
    const double two_pi = 2.0 * kPi;
    return {
        deg_to_rad(kRollAmp) * std::sin(two_pi * kRollHz * t),
        deg_to_rad(kPitchAmp) * std::sin(two_pi * kPitchHz * t),
        deg_to_rad(kYawAmp) * std::sin(two_pi * kYawHz * t),
    };
}

Vec3 setpoint_rate_rpy_rad(const std::string& maneuver, double t) {
    if (maneuver == "hover") return {0, 0, 0};
    const double two_pi = 2.0 * kPi;
    return {
        deg_to_rad(kRollAmp) * two_pi * kRollHz * std::cos(two_pi * kRollHz * t),
        deg_to_rad(kPitchAmp) * two_pi * kPitchHz * std::cos(two_pi * kPitchHz * t),
        deg_to_rad(kYawAmp) * two_pi * kYawHz * std::cos(two_pi * kYawHz * t),
    };
}

Quat initial_attitude(const std::string& maneuver) {
    if (maneuver == "hover") {
        return from_euler_rpy({deg_to_rad(5.0), deg_to_rad(-3.0), 0.0});
    }
    return Quat{};
}

AttitudeTrace run_experiment(const SimConfig& cfg, Variant variant, const FaultSchedule& schedule,
                             std::uint64_t seed) {
    const int n_ticks = static_cast<int>(std::llround(cfg.duration / kDt));
    const std::vector<Window> windows = windows_from_schedule(schedule, n_ticks);
    auto window_at = [&windows](int k) -> const Window* {
        for (const auto& w : windows) {
            if (k >= w.begin && k < w.end) return &w;
        }
        return nullptr;
    };

    Rng noise_rng(seed * 0x9E3779B97F4A7C15ull + 1);

    driver::Machine machine = driver::make_machine();
    driver::mcspi_init(machine);

    FlightState truth;
    truth.attitude = initial_attitude(cfg.maneuver);

    Quat q_est;
    Vec3 last_gyro_rad{0, 0, 0};
    Vec3 last_accel_g{0, 0, 1};
    Vec3 torque{0, 0, 0};
    int blocked_until = -1;

    AttitudeTrace trace;
    trace.dt = kDt;
    trace.rows.reserve(static_cast<std::size_t>(n_ticks));
    trace.torques.reserve(static_cast<std::size_t>(n_ticks));
    trace.controller_ran.reserve(static_cast<std::size_t>(n_ticks));

    for (int k = 0; k < n_ticks; ++k) {
        const double t = k * kDt;
        const Window* window = window_at(k);
        const bool fault = window != nullptr;
        const Vec3 setpoint = setpoint_rpy_rad(cfg.maneuver, t);

        bool ran_controller = false;
        bool stale = false;

        const bool frozen = variant == Variant::Unverified && k < blocked_until;
        if (!frozen) {
            if (!fault) {
                const ImuCounts counts = sample_imu_counts(truth, cfg.sensors, cfg.noise, noise_rng);
                append_imu_events(machine.abs.spi_env, counts);
            }
            const driver::ImuSample imu = driver::imu_read_sample(machine, variant, cfg.k_poll);
            if (imu.blocked) {
                // The unbounded read path spins until the device recovers:
                // the loop stays blocked to the end of the fault window.
                blocked_until = window ? window->end : k + 1;
            } else {
                if (imu.stale) {
                    stale = true;
                } else {
                    last_gyro_rad = {deg_to_rad(imu.gyro[0] / cfg.sensors.gyro.sensitivity),
                                     deg_to_rad(imu.gyro[1] / cfg.sensors.gyro.sensitivity),
                                     deg_to_rad(imu.gyro[2] / cfg.sensors.gyro.sensitivity)};
                    last_accel_g = {imu.accel[0] / cfg.sensors.accel.sensitivity,
                                    imu.accel[1] / cfg.sensors.accel.sensitivity,
                                    imu.accel[2] / cfg.sensors.accel.sensitivity};
                }
                std::optional<Vec3> mag;
                if (is_mag_tick(k)) {
                    const auto counts = sample_mag_counts(truth, cfg.sensors, cfg.noise, noise_rng);
                    append_mag_events(machine.abs.i2c_env, counts);
                    const driver::MagSample ms = driver::mag_read_sample(machine);
                    mag = Vec3{ms.field[0] / cfg.sensors.mag.sensitivity,
                               ms.field[1] / cfg.sensors.mag.sensitivity,
                               ms.field[2] / cfg.sensors.mag.sensitivity};
                }
                // A stale sample propagates the last rates but carries no
                // usable correction references: gyro-only step.
                if (stale) {
                    q_est = fuse_attitude(q_est, last_gyro_rad, Vec3{0, 0, 0}, std::nullopt,
                                          cfg.beta, kDt)
                                .q;
                } else {
                    q_est = fuse_attitude(q_est, last_gyro_rad, last_accel_g, mag, cfg.beta, kDt).q;
                }
                const Vec3 rate_err = last_gyro_rad - setpoint_rate_rpy_rad(cfg.maneuver, t);
                torque = controller_update(to_euler_rpy(q_est), setpoint, rate_err, cfg.gains,
                                           cfg.inertia);
                ran_controller = true;
            }
        }

        const Vec3 actual = to_euler_rpy(truth.attitude);
        trace.rows.push_back(TraceRow{t, rad_to_deg(setpoint.x), rad_to_deg(setpoint.y),
                                      rad_to_deg(setpoint.z), rad_to_deg(actual.x),
                                      rad_to_deg(actual.y), rad_to_deg(actual.z), stale, fault});
        trace.torques.push_back(torque);
        trace.controller_ran.push_back(ran_controller ? 1 : 0);

        truth = step_dynamics(truth, torque, kDt, cfg.inertia);
    }
    return trace;
}

std::string trace_to_csv(const AttitudeTrace& trace) {
    std::string out = "t,roll_des,pitch_des,yaw_des,roll,pitch,yaw,stale,fault\n";
    for (const auto& row : trace.rows) out += format_row(row);
    return out;
}

Metrics compute_metrics(const AttitudeTrace& trace) {
    if (trace.rows.empty()) throw std::invalid_argument("empty trace");
    const long tail_ticks = std::lround(0.5 / trace.dt);

    struct Acc {
        double sum_sq{0}, peak{0};
        double window_sum{0}, window_peak{0};
        double outside_sum{0}, outside_sq{0};
    };
    Acc acc[3];
    std::uint64_t window_ticks = 0, outside_ticks = 0;

    long last_fault = -(tail_ticks + 1000000);
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const auto& row = trace.rows[i];
        if (row.fault) last_fault = static_cast<long>(i);
        const bool inside = static_cast<long>(i) - last_fault <= tail_ticks;
        const double err[3] = {row.roll_des - row.roll, row.pitch_des - row.pitch,
                               row.yaw_des - row.yaw};
        if (inside) ++window_ticks;
        else ++outside_ticks;
        for (int a = 0; a < 3; ++a) {
            const double e = std::fabs(err[a]);
            acc[a].sum_sq += e * e;
            acc[a].peak = std::max(acc[a].peak, e);
            if (inside) {
                acc[a].window_sum += e;
                acc[a].window_peak = std::max(acc[a].window_peak, e);
            } else {
                acc[a].outside_sum += e;
                acc[a].outside_sq += e * e;
            }
        }
    }

    auto finish = [&](const Acc& a) {
        AxisMetrics m;
        m.rms = std::sqrt(a.sum_sq / static_cast<double>(trace.rows.size()));
        m.peak = a.peak;
        m.window_mean = window_ticks ? a.window_sum / static_cast<double>(window_ticks) : 0.0;
        m.outside_mean = outside_ticks ? a.outside_sum / static_cast<double>(outside_ticks) : 0.0;
        m.outside_rms =
            outside_ticks ? std::sqrt(a.outside_sq / static_cast<double>(outside_ticks)) : 0.0;
        m.window_peak = a.window_peak;
        if (m.outside_mean > 0.0) {
            m.window_ratio = m.window_mean / m.outside_mean;
        } else {
            m.window_ratio = m.window_mean == 0.0
                                 ? 0.0
                                 : std::numeric_limits<double>::infinity();
        }
        return m;
    };

    Metrics m;
    m.roll = finish(acc[0]);
    m.pitch = finish(acc[1]);
    m.yaw = finish(acc[2]);
    m.window_ticks = window_ticks;
    m.outside_ticks = outside_ticks;
    return m;
}

std::string metrics_to_kv(const Metrics& m) {
    std::string out;
    auto axis = [&out](const char* name, const AxisMetrics& a) {
        out += std::string(name) + ".rms = " + format_metric(a.rms) + "\n";
        out += std::string(name) + ".peak = " + format_metric(a.peak) + "\n";
        out += std::string(name) + ".window_mean = " + format_metric(a.window_mean) + "\n";
        out += std::string(name) + ".outside_mean = " + format_metric(a.outside_mean) + "\n";
        out += std::string(name) + ".window_peak = " + format_metric(a.window_peak) + "\n";
        out += std::string(name) + ".window_ratio = " + format_metric(a.window_ratio) + "\n";
    };
    axis("roll", m.roll);
    axis("pitch", m.pitch);
    axis("yaw", m.yaw);
    out += "window_ticks = " + std::to_string(m.window_ticks) + "\n";
    out += "outside_ticks = " + std::to_string(m.outside_ticks) + "\n";
    return out;
}

std::string metrics_csv_header() {
    return "run,rms_roll,rms_pitch,rms_yaw,peak_roll,peak_pitch,peak_yaw,"
           "ratio_roll,ratio_pitch,ratio_yaw\n";
}

std::string metrics_csv_row(const std::string& label, const Metrics& m) {
    std::string out = label;
    for (double v : {m.roll.rms, m.pitch.rms, m.yaw.rms, m.roll.peak, m.pitch.peak, m.yaw.peak,
                     m.roll.window_ratio, m.pitch.window_ratio, m.yaw.window_ratio}) {
        out += "," + format_metric(v);
    }
    out += "\n";
    return out;
}

}  // namespace certibus::sim
