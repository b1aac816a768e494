#pragma once

#include <optional>
#include <vector>

#include "certibus/refine/verdict.hpp"

namespace certibus::refine {

/// Result of running a program against a layer interface via the Highspecs.
/// `defined` is false when some step's Highspec was undefined on the state
/// it reached (the program is outside the specs' domain there).
struct HighRun {
    bool defined{true};
    std::size_t undefined_step{0};
    AbstractState abs;
    std::vector<driver::Ret> rets;
};

/// Result of running a program through the implementations on a machine.
struct ImplRun {
    driver::Machine machine;
    std::vector<driver::Ret> rets;
};

/// Execute each step by applying the Highspec of the named primitive, which
/// must be visible at `max_level`. Throws std::invalid_argument on an
/// unknown call.
HighRun run_program_high(const driver::Registry& reg, int max_level, const TestProgram& p,
                         const AbstractState& start);

/// Execute each step through the implementations, the linked modules
/// running inlined on the machine. Driver faults propagate as exceptions.
ImplRun run_program_impl(const driver::Registry& reg, int max_level, const TestProgram& p,
                         const AbstractState& start);

/// The shipped program suite for one adjacent layer pair; each exercises
/// the upper layer's module plus observation reads.
std::vector<TestProgram> default_programs_for_pair(const driver::LayerSpec& lower,
                                                   const driver::LayerSpec& upper);

}  // namespace certibus::refine
