#pragma once

#include <cstdint>

#include "certibus/driver/state.hpp"

namespace certibus::driver {

/// A running driver instance: abstract bus state plus driver-visible
/// memory. Owned by one thread; distinct machines are independent.
/// The counters are diagnostics, not semantic state.
struct Machine {
    AbstractState abs;
    MemoryState mem;

    std::uint64_t spi_bus_ops{0};
    std::uint64_t i2c_bus_ops{0};
    // Set when an SPI bus operation polled an exhausted event list; from
    // that point behavior may depend on how the list would be extended.
    bool spi_hit_exhausted{false};
};

/// Machine with both buses at reset and memory mirroring them.
Machine make_machine();

// Register read/write interface of the two buses (the bottom of the layer
// stack). These apply the bus read/write semantics in place and mirror CPU
// writes into the memory cell of the target register.
Word spi_reg_read(Machine& m, RegAddr addr);
void spi_reg_write(Machine& m, Word value, RegAddr addr);
Word i2c_reg_read(Machine& m, RegAddr addr);
void i2c_reg_write(Machine& m, Word value, RegAddr addr);

}  // namespace certibus::driver
