#pragma once

#include <cstdint>
#include <vector>

namespace certibus::sim {

/// When the injected device anomalies strike: occurrence times with
/// consecutive gaps drawn uniformly from [interval_min, interval_max], each
/// starving the SPI event stream for block_duration seconds.
struct FaultSchedule {
    std::uint64_t seed{0};
    double interval_min{5.0};
    double interval_max{10.0};
    double block_duration{0.2};
    std::vector<double> occurrences;  // sorted, first at >= interval_min
};

FaultSchedule make_fault_schedule(std::uint64_t seed, double duration);

/// Empty schedule (no injected faults).
FaultSchedule no_fault_schedule();

}  // namespace certibus::sim
