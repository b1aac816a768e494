#pragma once

#include <array>

#include "certibus/bus/events.hpp"
#include "certibus/bus/regmap.hpp"
#include "certibus/bus/types.hpp"

namespace certibus::bus {

enum class SpiMs { Master, Slave };

/// Abstract register file of the SPI bus: twenty-five registers, all zero at
/// reset (module disabled, master mode, channel 0 disabled). One-bit fields
/// store whatever word was written; the flag accessors read nonzero as set.
struct SpiState {
    std::array<Word, kSpiRegisterCount> regs{};

    Word reg(RegAddr addr) const {
        if (!spi_has_register(addr)) throw UnknownRegisterError("SPI", addr.index);
        return regs[addr.index];
    }

    Word rx() const { return regs[spi_reg::kRx.index]; }
    Word tx() const { return regs[spi_reg::kTx.index]; }
    bool enabled() const { return regs[spi_reg::kEn.index] != 0; }
    SpiMs ms() const { return regs[spi_reg::kMs.index] == 0 ? SpiMs::Master : SpiMs::Slave; }
    bool ch0_enabled() const { return regs[spi_reg::kCh0Ctrl.index] != 0; }
    bool tx_empty() const { return regs[spi_reg::kTxEmpty.index] != 0; }
    bool rx_full() const { return regs[spi_reg::kRxFull.index] != 0; }

    friend constexpr bool operator==(const SpiState&, const SpiState&) = default;
};

/// CPU-driven transition; same shape as the I2C one.
SpiState delta_cpu(const CpuOp& op, const SpiState& s);

/// Environment-driven transition: Null is the identity, XferDone raises
/// TxEmpty, Recv(val) lands val in SpiRx and raises RxFull.
SpiState delta_env(const SpiEvent& e, const SpiState& s);

Word kappa(RegAddr addr, const SpiState& s);

struct SpiReadResult {
    Word value;
    SpiState state;
    SpiEventLog log;

    friend bool operator==(const SpiReadResult&, const SpiReadResult&) = default;
};

struct SpiWriteResult {
    SpiState state;
    SpiEventLog log;

    friend bool operator==(const SpiWriteResult&, const SpiWriteResult&) = default;
};

SpiReadResult read(RegAddr addr, const SpiState& s, const SpiEventLog& log,
                   const SpiEventList& env);

SpiWriteResult write(RegAddr addr, Word v, const SpiState& s, const SpiEventLog& log,
                     const SpiEventList& env);

}  // namespace certibus::bus
