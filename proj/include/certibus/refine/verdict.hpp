#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "certibus/driver/layers.hpp"

namespace certibus::refine {

using driver::AbstractState;
using driver::Args;
using driver::MemoryState;

enum class Status { Pass, Fail, Undefined };

std::string to_string(Status s);

/// A named sequence of layer-interface calls with argument values, executed
/// against a layer interface by the contextual-refinement check.
struct TestProgram {
    struct Step {
        std::string call;
        Args args;

        friend bool operator==(const Step&, const Step&) = default;
    };

    std::string name;
    std::vector<Step> steps;

    friend bool operator==(const TestProgram&, const TestProgram&) = default;
};

/// Everything needed to replay a failed check deterministically: the check
/// kind, the primitive (or program) it was running, the initial states, and
/// the violated clause.
struct Counterexample {
    std::string check;      // refinement | impl_vs_lowspec | invariant | bounded_poll | contextual
    std::string layer;
    std::string primitive;  // or the linked module's primitive for contextual
    Args args;
    AbstractState abs;
    MemoryState mem;
    std::string violated;
    std::optional<TestProgram> program;  // contextual only
    std::string upper_layer;             // contextual only
    std::string lower_layer;             // contextual only
    std::string mutant;                  // mutant id when produced by the mutant suite
    unsigned k_poll{0};                  // bounded_poll only
};

struct Verdict {
    Status status{Status::Pass};
    std::uint64_t states_tested{0};
    std::optional<Counterexample> counterexample;

    bool passed() const { return status == Status::Pass; }
};

}  // namespace certibus::refine
