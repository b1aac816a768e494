#include "certibus/bus/i2c.hpp"

namespace certibus::bus {

I2cState delta_cpu(const CpuOp& op, const I2cState& s) {
    if (!i2c_has_register(op.addr)) throw UnknownRegisterError("I2C", op.addr.index);
    if (op.kind == CpuOp::Kind::Input) return s;
    I2cState next = s;
    next.regs[op.addr.index] = op.value;
    return next;
}

I2cState delta_env(const I2cEvent& e, const I2cState& s) {
    if (e.kind != I2cEvent::Kind::Recv) return s;
    I2cState next = s;
    next.regs[i2c_reg::kRxData.index] = e.value;
    return next;
}

Word kappa(RegAddr addr, const I2cState& s) { return s.reg(addr); }

I2cReadResult read(RegAddr addr, const I2cState& s, const I2cEventLog& log,
                   const I2cEventList& env) {
    if (!i2c_has_register(addr)) throw UnknownRegisterError("I2C", addr.index);
    if (!is_prefix(log, env)) throw EventLogPrefixError{};

    I2cReadResult r{0, s, log};
    if (log.size() < env.size()) {
        const I2cEvent& e = env[log.size()];
        if (e.kind == I2cEvent::Kind::Recv) r.state.regs[i2c_reg::kRxData.index] = e.value;
        r.log.push_back(e);
    }
    r.value = r.state.regs[addr.index];
    // CPU read transition is the identity.
    return r;
}

I2cWriteResult write(RegAddr addr, Word v, const I2cState& s, const I2cEventLog& log,
                     const I2cEventList& env) {
    if (!i2c_has_register(addr)) throw UnknownRegisterError("I2C", addr.index);
    if (!is_prefix(log, env)) throw EventLogPrefixError{};

    I2cWriteResult r{s, log};
    if (log.size() < env.size()) {
        const I2cEvent& e = env[log.size()];
        if (e.kind == I2cEvent::Kind::Recv) r.state.regs[i2c_reg::kRxData.index] = e.value;
        r.log.push_back(e);
    }
    r.state.regs[addr.index] = v;
    return r;
}

}  // namespace certibus::bus
