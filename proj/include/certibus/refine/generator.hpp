#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "certibus/driver/layers.hpp"

namespace certibus::refine {

/// Start-state source for the checks. Exhaustive enumerates the layer's
/// declared state domain over finite bounds (one-bit fields fully, word
/// fields over the samples, event lists up to the domain length with every
/// log position); Random draws reproducible samples from the same domain.
struct StateGenerator {
    enum class Strategy { Exhaustive, Random };

    Strategy strategy{Strategy::Exhaustive};
    driver::StateDomain domain;
    std::vector<driver::Word> word_samples{0, 1, 0xFFFFFFFFu};
    std::vector<driver::Word> event_values{0, 1, 2};
    std::uint64_t seed{0};       // Random
    std::uint64_t count{0};      // Random
    std::uint64_t budget{UINT64_MAX};  // cap on states visited

    static StateGenerator exhaustive(driver::StateDomain domain,
                                     std::uint64_t budget = UINT64_MAX) {
        StateGenerator g;
        g.domain = std::move(domain);
        g.budget = budget;
        return g;
    }

    static StateGenerator random(driver::StateDomain domain, std::uint64_t seed,
                                 std::uint64_t count) {
        StateGenerator g;
        g.strategy = Strategy::Random;
        g.domain = std::move(domain);
        g.seed = seed;
        g.count = count;
        return g;
    }
};

/// Visit generated abstract states. The callback returns false to stop.
/// Generated states satisfy the default layer invariant by construction;
/// pair them with shadow_memory() to satisfy the default relation.
void for_each_state(const StateGenerator& gen,
                    const std::function<bool(const driver::AbstractState&)>& fn);

/// Materialize at most `limit` states (handy for program-based checks).
std::vector<driver::AbstractState> sample_states(const StateGenerator& gen, std::uint64_t limit);

}  // namespace certibus::refine
