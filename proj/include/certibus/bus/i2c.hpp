#pragma once

#include <array>

#include "certibus/bus/events.hpp"
#include "certibus/bus/regmap.hpp"
#include "certibus/bus/types.hpp"

namespace certibus::bus {

/// Abstract register file of the I2C bus: ten 32-bit registers, all zero at
/// reset. A pure value; copy and compare by value.
struct I2cState {
    std::array<Word, kI2cRegisterCount> regs{};

    Word reg(RegAddr addr) const {
        if (!i2c_has_register(addr)) throw UnknownRegisterError("I2C", addr.index);
        return regs[addr.index];
    }

    friend constexpr bool operator==(const I2cState&, const I2cState&) = default;
};

/// CPU-driven transition. Reads leave the state untouched; a write replaces
/// exactly the addressed register.
I2cState delta_cpu(const CpuOp& op, const I2cState& s);

/// Environment-driven transition. Null and Ack are identities; Recv(val)
/// lands val in I2C_RX_DATA.
I2cState delta_env(const I2cEvent& e, const I2cState& s);

/// Register readout: plain projection of the addressed register.
Word kappa(RegAddr addr, const I2cState& s);

struct I2cReadResult {
    Word value;
    I2cState state;
    I2cEventLog log;

    friend bool operator==(const I2cReadResult&, const I2cReadResult&) = default;
};

struct I2cWriteResult {
    I2cState state;
    I2cEventLog log;

    friend bool operator==(const I2cWriteResult&, const I2cWriteResult&) = default;
};

/// Read semantics: pop the next pending event, apply it, project the
/// addressed register, then apply the (identity) CPU read transition.
/// Implemented fused; must agree with the step-by-step composition of
/// next_event / delta_env / kappa / delta_cpu.
I2cReadResult read(RegAddr addr, const I2cState& s, const I2cEventLog& log,
                   const I2cEventList& env);

/// Write semantics: pop the next pending event, apply it, then apply the
/// CPU write transition. Fused, like read.
I2cWriteResult write(RegAddr addr, Word v, const I2cState& s, const I2cEventLog& log,
                     const I2cEventList& env);

}  // namespace certibus::bus
