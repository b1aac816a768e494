#pragma once

#include <string>

#include "certibus/refine/verdict.hpp"

namespace certibus::refine {

/// Counterexamples serialize to JSON replay files; a replay reconstructs
/// the registry (with the recorded mutant seeded, if any), re-runs the
/// failed check on the recorded states, and confirms the same violation.
std::string counterexample_to_json(const Counterexample& cex);
Counterexample counterexample_from_json(const std::string& text);

void save_counterexample(const Counterexample& cex, const std::string& path);
Counterexample load_counterexample(const std::string& path);

struct ReplayResult {
    bool reproduced{false};
    std::string detail;
};

ReplayResult replay(const Counterexample& cex, const driver::DriverConfig& cfg = {});

}  // namespace certibus::refine
