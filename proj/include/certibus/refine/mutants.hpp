#pragma once

#include <optional>
#include <string>
#include <vector>

#include "certibus/driver/layers.hpp"

namespace certibus::refine {

/// Deliberately seeded specification/implementation bugs used to establish
/// the harness's detection floor. Every one of them must be rejected.
enum class MutantId {
    WrongRegisterLowspec,   // enable-channel lowspec writes SpiTx instead of the enable bit
    DroppedWrite,           // select skips the channel-conf write
    SwappedArguments,       // register write swaps (value, addr)
    SkippedLayer,           // init calls the enable layer directly, skipping select
    LogTruncation,          // enable-channel highspec truncates the event log
    MissingEnvTransition,   // I2C register read pops the event without applying it
    ReorderedReadSteps,     // SPI register read projects the register before the env step
    UnboundedPoll,          // transfer polls past the advertised budget
    LinkedWrongRegister,    // select writes the channel conf to the status register
};

const std::vector<MutantId>& all_mutants();
std::string to_string(MutantId id);
std::optional<MutantId> mutant_from_string(const std::string& name);

/// Seed one bug into an otherwise shipped registry.
void apply_mutant(driver::Registry& reg, MutantId id);

driver::Registry build_mutant_registry(MutantId id, const driver::DriverConfig& cfg = {});

}  // namespace certibus::refine
