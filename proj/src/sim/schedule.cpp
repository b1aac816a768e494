#include "certibus/sim/schedule.hpp"

#include "certibus/sim/rng.hpp"

namespace certibus::sim {

FaultSchedule make_fault_schedule(std::uint64_t seed, double duration) {
    FaultSchedule schedule;
    schedule.seed = seed;
    Rng rng(seed);
    double t = 0.0;
    for (;;) {
        t += rng.uniform(schedule.interval_min, schedule.interval_max);
        if (t >= duration) break;
        schedule.occurrences.push_back(t);
    }
    return schedule;
}

FaultSchedule no_fault_schedule() { return FaultSchedule{}; }

}  // namespace certibus::sim
