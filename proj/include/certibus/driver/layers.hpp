#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certibus/driver/machine.hpp"
#include "certibus/driver/ops.hpp"
#include "certibus/driver/state.hpp"

namespace certibus::driver {

// A primitive's observable arguments and return values, encoded uniformly
// as word vectors so the harness can compare them across execution routes.
using Args = std::vector<Word>;
using Ret = std::vector<Word>;

struct HighStep {
    AbstractState abs;
    Ret ret;
};

struct LowStep {
    MemoryState mem;
    AbstractState abs;
    Ret ret;
};

// Specifications are pure deterministic partial functions: nullopt marks
// states outside the primitive's domain. Implementations run against a
// machine and may throw on driver faults.
using HighFn = std::function<std::optional<HighStep>(const AbstractState&, const Args&)>;
using LowFn =
    std::function<std::optional<LowStep>(const MemoryState&, const AbstractState&, const Args&)>;
using ImplFn = std::function<Ret(Machine&, const Args&)>;
using RelateFn = std::function<bool(const AbstractState&, const MemoryState&)>;
using InvariantFn = std::function<bool(const AbstractState&)>;

/// Values an argument position ranges over when the harness enumerates
/// primitive instances.
struct ArgDomain {
    std::string label;
    std::vector<Word> values;
};

/// One layer primitive: the implementation plus its two specifications.
struct Primitive {
    std::string name;
    std::vector<ArgDomain> args;
    HighFn high;
    LowFn low;
    ImplFn impl;
};

/// Which abstract-state dimensions vary when generating start states for a
/// layer's checks. Fields not listed stay at their reset values.
struct StateDomain {
    std::vector<RegAddr> spi_flags;  // enumerated over {0, 1}
    std::vector<RegAddr> spi_words;  // enumerated over the word samples
    std::vector<RegAddr> i2c_words;
    int spi_env_len{0};  // event lists enumerated up to this length
    int i2c_env_len{0};
};

/// One driver layer: its module's primitives, the abstraction relation and
/// invariant the layer maintains, and the declared dependency edges (every
/// callee must live at a strictly lower level).
struct LayerSpec {
    std::string layer;
    std::string stack;  // "spi" or "i2c"
    int level{0};
    std::string module;
    std::vector<std::string> depends;
    std::vector<Primitive> primitives;
    RelateFn relation;
    InvariantFn invariant;
    StateDomain domain;
    bool bounded_poll_check{false};
    unsigned k_poll{kDefaultPollBudget};
};

struct DriverConfig {
    unsigned k_poll{kDefaultPollBudget};
};

struct Registry {
    std::vector<LayerSpec> layers;  // sorted by (level, layer)
    unsigned k_poll{kDefaultPollBudget};
};

/// The shipped SPI and I2C driver stacks.
Registry build_registry(const DriverConfig& cfg = {});

/// Every declared dependency resolves to a module at a strictly lower level.
bool layer_dag_ok(const Registry& reg);

/// Registry rendered one layer per line: LEVEL<TAB>LAYER<TAB>MODULE<TAB>DEPENDS.
std::string format_layer_table(const Registry& reg);

/// Look up a primitive visible at `max_level` (its own layer's level must
/// not exceed it). Returns nullptr when the name is unknown.
const Primitive* find_primitive(const Registry& reg, const std::string& name, int max_level);
const LayerSpec* find_layer(const Registry& reg, const std::string& layer);

/// Consecutive-level layer pairs within one stack, bottom-up.
std::vector<std::pair<const LayerSpec*, const LayerSpec*>> adjacent_pairs(const Registry& reg);

// Pure specification-level semantics. Highspec building blocks run over the
// abstract state via the fused bus operations; Lowspec building blocks run
// over (memory, abstract) pairs via the step-by-step composition of
// next_event, the environment transition, the readout, and the CPU
// transition, mirroring CPU writes into the register's memory cell.
namespace spec {

AbstractState high_spi_write(AbstractState a, Word v, RegAddr addr);
std::pair<AbstractState, Word> high_spi_read(AbstractState a, RegAddr addr);
AbstractState high_i2c_write(AbstractState a, Word v, RegAddr addr);
std::pair<AbstractState, Word> high_i2c_read(AbstractState a, RegAddr addr);

struct LowPair {
    MemoryState mem;
    AbstractState abs;
};

LowPair low_spi_write(LowPair s, Word v, RegAddr addr);
std::pair<LowPair, Word> low_spi_read(LowPair s, RegAddr addr);
LowPair low_i2c_write(LowPair s, Word v, RegAddr addr);
std::pair<LowPair, Word> low_i2c_read(LowPair s, RegAddr addr);

// Per-primitive specifications, shared between the registry and the seeded
// mutants. All are deterministic partial functions.
std::optional<AbstractState> high_enable_channel(const AbstractState& a);
std::optional<AbstractState> high_disable_channel(const AbstractState& a);
std::optional<AbstractState> high_select_channel(const AbstractState& a, bool enable);
std::optional<AbstractState> high_init(const AbstractState& a);

struct TransferStep {
    AbstractState abs;
    TransferResult result;
    unsigned polls{0};
};
std::optional<TransferStep> high_transfer(const AbstractState& a, Word tx, unsigned k_poll);

std::optional<LowPair> low_enable_channel(const LowPair& s);
std::optional<LowPair> low_disable_channel(const LowPair& s);
std::optional<LowPair> low_select_channel(const LowPair& s, bool enable);
std::optional<LowPair> low_init(const LowPair& s);

struct LowTransferStep {
    LowPair state;
    TransferResult result;
};
std::optional<LowTransferStep> low_transfer(const LowPair& s, Word tx, unsigned k_poll);

}  // namespace spec

}  // namespace certibus::driver
