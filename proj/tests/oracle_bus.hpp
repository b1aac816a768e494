#pragma once

// Step-by-step read/write oracles: the literal four-step (three-step for
// writes) composition of next_event, the environment transition, the
// readout, and the CPU transition. Kept independent of the fused library
// implementations they are checked against.

#include "certibus/bus/i2c.hpp"
#include "certibus/bus/spi.hpp"

namespace oracle {

inline certibus::bus::I2cReadResult i2c_read_steps(certibus::bus::RegAddr addr,
                                                   const certibus::bus::I2cState& s,
                                                   const certibus::bus::I2cEventLog& log,
                                                   const certibus::bus::I2cEventList& env) {
    using namespace certibus::bus;
    auto [e, log2] = next_event(env, log);
    const I2cState s1 = delta_env(e, s);
    const Word res = kappa(addr, s1);
    const I2cState s2 = delta_cpu(CpuOp::input(addr), s1);
    return I2cReadResult{res, s2, log2};
}

inline certibus::bus::I2cWriteResult i2c_write_steps(certibus::bus::RegAddr addr,
                                                     certibus::bus::Word v,
                                                     const certibus::bus::I2cState& s,
                                                     const certibus::bus::I2cEventLog& log,
                                                     const certibus::bus::I2cEventList& env) {
    using namespace certibus::bus;
    auto [e, log2] = next_event(env, log);
    const I2cState s1 = delta_env(e, s);
    const I2cState s2 = delta_cpu(CpuOp::output(addr, v), s1);
    return I2cWriteResult{s2, log2};
}

inline certibus::bus::SpiReadResult spi_read_steps(certibus::bus::RegAddr addr,
                                                   const certibus::bus::SpiState& s,
                                                   const certibus::bus::SpiEventLog& log,
                                                   const certibus::bus::SpiEventList& env) {
    using namespace certibus::bus;
    auto [e, log2] = next_event(env, log);
    const SpiState s1 = delta_env(e, s);
    const Word res = kappa(addr, s1);
    const SpiState s2 = delta_cpu(CpuOp::input(addr), s1);
    return SpiReadResult{res, s2, log2};
}

inline certibus::bus::SpiWriteResult spi_write_steps(certibus::bus::RegAddr addr,
                                                     certibus::bus::Word v,
                                                     const certibus::bus::SpiState& s,
                                                     const certibus::bus::SpiEventLog& log,
                                                     const certibus::bus::SpiEventList& env) {
    using namespace certibus::bus;
    auto [e, log2] = next_event(env, log);
    const SpiState s1 = delta_env(e, s);
    const SpiState s2 = delta_cpu(CpuOp::output(addr, v), s1);
    return SpiWriteResult{s2, log2};
}

/// Every I2C event list of length <= max_len over {NULL, ACK, RECV v} with
/// values drawn from `values`.
inline std::vector<certibus::bus::I2cEventList> all_i2c_lists(
    int max_len, const std::vector<certibus::bus::Word>& values) {
    using namespace certibus::bus;
    std::vector<I2cEvent> symbols{I2cEvent::null(), I2cEvent::ack()};
    for (Word v : values) symbols.push_back(I2cEvent::recv(v));
    std::vector<I2cEventList> lists{{}};
    std::vector<I2cEventList> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<I2cEventList> next;
        for (const auto& base : frontier) {
            for (const auto& sym : symbols) {
                I2cEventList extended = base;
                extended.push_back(sym);
                next.push_back(extended);
                lists.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return lists;
}

inline std::vector<certibus::bus::SpiEventList> all_spi_lists(
    int max_len, const std::vector<certibus::bus::Word>& values) {
    using namespace certibus::bus;
    std::vector<SpiEvent> symbols{SpiEvent::null(), SpiEvent::xfer_done()};
    for (Word v : values) symbols.push_back(SpiEvent::recv(v));
    std::vector<SpiEventList> lists{{}};
    std::vector<SpiEventList> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<SpiEventList> next;
        for (const auto& base : frontier) {
            for (const auto& sym : symbols) {
                SpiEventList extended = base;
                extended.push_back(sym);
                next.push_back(extended);
                lists.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return lists;
}

}  // namespace oracle
