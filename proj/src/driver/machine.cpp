#include "certibus/driver/machine.hpp"

namespace certibus::driver {

namespace {

// Pop the next pending SPI event into the state, if any.
void consume_spi_event(Machine& m) {
    auto& a = m.abs;
    if (a.spi_log.size() < a.spi_env.size()) {
        const bus::SpiEvent& e = a.spi_env[a.spi_log.size()];
        switch (e.kind) {
            case bus::SpiEvent::Kind::Null:
                break;
            case bus::SpiEvent::Kind::XferDone:
                a.spi.regs[bus::spi_reg::kTxEmpty.index] = 1;
                break;
            case bus::SpiEvent::Kind::Recv:
                a.spi.regs[bus::spi_reg::kRx.index] = e.value;
                a.spi.regs[bus::spi_reg::kRxFull.index] = 1;
                break;
        }
        a.spi_log.push_back(e);
        ++a.clock;
    } else {
        m.spi_hit_exhausted = true;
    }
}

void consume_i2c_event(Machine& m) {
    auto& a = m.abs;
    if (a.i2c_log.size() < a.i2c_env.size()) {
        const bus::I2cEvent& e = a.i2c_env[a.i2c_log.size()];
        if (e.kind == bus::I2cEvent::Kind::Recv) {
            a.i2c.regs[bus::i2c_reg::kRxData.index] = e.value;
        }
        a.i2c_log.push_back(e);
        ++a.clock;
    }
}

}  // namespace

Machine make_machine() {
    Machine m;
    m.mem = shadow_memory(m.abs);
    return m;
}

Word spi_reg_read(Machine& m, RegAddr addr) {
    if (!bus::spi_has_register(addr)) throw bus::UnknownRegisterError("SPI", addr.index);
    ++m.spi_bus_ops;
    consume_spi_event(m);
    return m.abs.spi.regs[addr.index];
}

void spi_reg_write(Machine& m, Word value, RegAddr addr) {
    if (!bus::spi_has_register(addr)) throw bus::UnknownRegisterError("SPI", addr.index);
    ++m.spi_bus_ops;
    consume_spi_event(m);
    m.abs.spi.regs[addr.index] = value;
    m.mem.set_cell(spi_mmio(addr), value);
}

Word i2c_reg_read(Machine& m, RegAddr addr) {
    if (!bus::i2c_has_register(addr)) throw bus::UnknownRegisterError("I2C", addr.index);
    ++m.i2c_bus_ops;
    consume_i2c_event(m);
    return m.abs.i2c.regs[addr.index];
}

void i2c_reg_write(Machine& m, Word value, RegAddr addr) {
    if (!bus::i2c_has_register(addr)) throw bus::UnknownRegisterError("I2C", addr.index);
    ++m.i2c_bus_ops;
    consume_i2c_event(m);
    m.abs.i2c.regs[addr.index] = value;
    m.mem.set_cell(i2c_mmio(addr), value);
}

}  // namespace certibus::driver
