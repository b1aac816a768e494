#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "certibus/bus/i2c.hpp"
#include "certibus/bus/spi.hpp"

namespace certibus::driver {

using bus::RegAddr;
using bus::Word;

/// Whole-system abstract state threaded through the layer specifications:
/// both bus register files, the external event list and consumed log of
/// each bus, and a clock that advances once per consumed event.
struct AbstractState {
    bus::SpiState spi;
    bus::I2cState i2c;
    bus::SpiEventList spi_env;
    bus::SpiEventLog spi_log;
    bus::I2cEventList i2c_env;
    bus::I2cEventLog i2c_log;
    std::uint64_t clock{0};

    friend bool operator==(const AbstractState&, const AbstractState&) = default;
};

// Driver-visible memory: the memory-mapped register cells of both buses
// plus declared scratch slots. The domain is fixed.
inline constexpr Word kI2cMmioBase = 0x100;
inline constexpr Word kSpiMmioBase = 0x200;
inline constexpr Word kScratchXferPolls = 0x300;
inline constexpr std::size_t kMemoryCellCount =
    bus::kI2cRegisterCount + bus::kSpiRegisterCount + 1;

constexpr Word i2c_mmio(RegAddr addr) { return kI2cMmioBase + addr.index; }
constexpr Word spi_mmio(RegAddr addr) { return kSpiMmioBase + addr.index; }

/// Finite map from addresses to words over the fixed driver-visible domain.
struct MemoryState {
    std::array<Word, kMemoryCellCount> cells{};

    static std::optional<std::size_t> slot(Word addr);
    static const std::vector<Word>& domain();  // sorted addresses

    Word cell(Word addr) const;
    void set_cell(Word addr, Word value);

    friend bool operator==(const MemoryState&, const MemoryState&) = default;
};

/// Registers the device itself may change (via environment transitions).
/// The abstraction relation does not constrain their memory cells.
bool is_volatile_spi_reg(RegAddr addr);
bool is_volatile_i2c_reg(RegAddr addr);

/// Memory image of an abstract state: every register cell mirrors the
/// abstract register file, scratch slots zero. Satisfies default_relation.
MemoryState shadow_memory(const AbstractState& abs);

/// The abstraction relation used by the shipped layers: for every
/// non-volatile register the memory cell agrees with the abstract register
/// file. Volatile registers and scratch slots are unconstrained.
bool default_relation(const AbstractState& abs, const MemoryState& mem);

/// The layer invariant used by the shipped layers: each event log is a
/// prefix of its event list and the clock counts exactly the consumed
/// events of both buses.
bool default_invariant(const AbstractState& abs);

}  // namespace certibus::driver
