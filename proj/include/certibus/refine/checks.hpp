#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "certibus/refine/generator.hpp"
#include "certibus/refine/program.hpp"
#include "certibus/refine/verdict.hpp"

namespace certibus::refine {

// Arg-bound views of one primitive instance.
using BoundHigh = std::function<std::optional<driver::HighStep>(const AbstractState&)>;
using BoundLow =
    std::function<std::optional<driver::LowStep>(const MemoryState&, const AbstractState&)>;
using BoundImpl = std::function<driver::Ret(driver::Machine&)>;

/// A (state, memory) pair feed for the checks. Visitors return false to stop.
using StateSource =
    std::function<void(const std::function<bool(const AbstractState&, const MemoryState&)>&)>;

StateSource source_from_generator(const StateGenerator& gen);

struct StatePair {
    AbstractState abs;
    MemoryState mem;
};
StateSource source_from_pairs(std::vector<StatePair> pairs);

/// The simulation obligation: whenever the Highspec steps from a related
/// (a, m), the Lowspec must step too, its memory result staying related to
/// the Highspec's abstract result and the abstract results and observables
/// agreeing. Undefined when the Highspec stepped on no generated state.
/// Throws std::logic_error if either spec evaluates non-deterministically.
Verdict check_refinement(const BoundHigh& high, const BoundLow& low,
                         const driver::RelateFn& relate, const StateSource& states);

/// Runs the implementation on a bus-model-backed machine from every state
/// the Lowspec is defined on and requires bitwise equality of both end
/// state components and of the observables.
Verdict check_impl_against_lowspec(const BoundImpl& impl, const BoundLow& low,
                                   const StateSource& states);

/// For every generated state satisfying the invariant on which the Highspec
/// is defined, the result satisfies the invariant too.
Verdict check_invariant_preservation(const BoundHigh& high, const driver::InvariantFn& invariant,
                                     const StateSource& states);

/// Bounded-response check of the bounded-poll transfer: over every event
/// list of length <= max_len from the {NULL, XFERDONE, RECV v} alphabet the
/// implementation issues at most k_poll polls. Lists are covered by
/// consumed-prefix classes: once a run terminates without ever polling an
/// exhausted list, all extensions behave identically; the class count is
/// verified against the full 3^0+...+3^max_len space.
Verdict check_bounded_poll(const driver::Primitive& transfer, driver::Word tx, unsigned k_poll,
                           int max_len);

/// Layer linking: running the program against the upper interface via the
/// Highspecs must agree with running it through the implementations (the
/// linked module inlined over the lower interface) — equal observables at
/// every step, equal final abstract states, and the abstraction relation
/// holding between the Highspec result and the machine memory.
Verdict check_contextual_refinement(const TestProgram& program, const driver::Registry& reg,
                                    const driver::LayerSpec& upper, const driver::LayerSpec& lower,
                                    const std::vector<AbstractState>& states);

struct ReportRow {
    std::string layer;
    std::string check;
    std::string status;  // PASS | FAIL | UNDEFINED | SKIPPED
    std::uint64_t states_tested{0};
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<Counterexample> counterexamples;

    bool all_pass() const;
};

/// One line per check: LAYER<TAB>CHECK<TAB>STATUS<TAB>STATES_TESTED.
std::string format_report(const Report& report);

inline constexpr std::uint64_t kDefaultBudget = UINT64_MAX;
inline constexpr std::uint64_t kContextualStates = 192;

/// Runs refinement, implementation, and invariant checks for every layer
/// bottom-up (plus the bounded-poll check where a layer requests it), then
/// contextual refinement for every adjacent pair. Layers depending on a
/// failed module are skipped: each layer's checks assume the correctness of
/// the layers below it.
Report run_all(const driver::Registry& reg, std::uint64_t budget = kDefaultBudget);

}  // namespace certibus::refine
