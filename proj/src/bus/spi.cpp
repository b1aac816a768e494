#include "certibus/bus/spi.hpp"

namespace certibus::bus {

namespace {

void apply_env(const SpiEvent& e, SpiState& s) {
    switch (e.kind) {
        case SpiEvent::Kind::Null:
            break;
        case SpiEvent::Kind::XferDone:
            s.regs[spi_reg::kTxEmpty.index] = 1;
            break;
        case SpiEvent::Kind::Recv:
            s.regs[spi_reg::kRx.index] = e.value;
            s.regs[spi_reg::kRxFull.index] = 1;
            break;
    }
}

}  // namespace

SpiState delta_cpu(const CpuOp& op, const SpiState& s) {
    if (!spi_has_register(op.addr)) throw UnknownRegisterError("SPI", op.addr.index);
    if (op.kind == CpuOp::Kind::Input) return s;
    SpiState next = s;
    next.regs[op.addr.index] = op.value;
    return next;
}

SpiState delta_env(const SpiEvent& e, const SpiState& s) {
    SpiState next = s;
    apply_env(e, next);
    return next;
}

Word kappa(RegAddr addr, const SpiState& s) { return s.reg(addr); }

SpiReadResult read(RegAddr addr, const SpiState& s, const SpiEventLog& log,
                   const SpiEventList& env) {
    if (!spi_has_register(addr)) throw UnknownRegisterError("SPI", addr.index);
    if (!is_prefix(log, env)) throw EventLogPrefixError{};

    SpiReadResult r{0, s, log};
    if (log.size() < env.size()) {
        const SpiEvent& e = env[log.size()];
        apply_env(e, r.state);
        r.log.push_back(e);
    }
    r.value = r.state.regs[addr.index];
    return r;
}

SpiWriteResult write(RegAddr addr, Word v, const SpiState& s, const SpiEventLog& log,
                     const SpiEventList& env) {
    if (!spi_has_register(addr)) throw UnknownRegisterError("SPI", addr.index);
    if (!is_prefix(log, env)) throw EventLogPrefixError{};

    SpiWriteResult r{s, log};
    if (log.size() < env.size()) {
        const SpiEvent& e = env[log.size()];
        apply_env(e, r.state);
        r.log.push_back(e);
    }
    r.state.regs[addr.index] = v;
    return r;
}

}  // namespace certibus::bus
