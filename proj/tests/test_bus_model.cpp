#include "doctest.h"

#include "certibus/bus/i2c.hpp"
#include "certibus/bus/spi.hpp"

#include "oracle_bus.hpp"

using namespace certibus::bus;

namespace {

I2cState i2c_with(RegAddr addr, Word v) {
    I2cState s;
    s.regs[addr.index] = v;
    return s;
}

}  // namespace

TEST_CASE("register maps have the published shapes") {
    CHECK(i2c_register_map().size() == 10);
    CHECK(spi_register_map().size() == 25);
    for (const auto& r : i2c_register_map()) CHECK(r.reset == 0);
    for (const auto& r : spi_register_map()) CHECK(r.reset == 0);
    // indices are dense and match the table position
    for (Word i = 0; i < kI2cRegisterCount; ++i) CHECK(i2c_register_map()[i].index == i);
    for (Word i = 0; i < kSpiRegisterCount; ++i) CHECK(spi_register_map()[i].index == i);

    SpiState reset;
    CHECK_FALSE(reset.enabled());
    CHECK(reset.ms() == SpiMs::Master);
    CHECK_FALSE(reset.ch0_enabled());
}

TEST_CASE("cpu transition: reads are identities, writes hit one field") {
    const I2cState s = i2c_with(i2c_reg::kSa, 0);

    CHECK(delta_cpu(CpuOp::input(i2c_reg::kRxData), s) == s);

    const I2cState written = delta_cpu(CpuOp::output(i2c_reg::kSa, 0x68), s);
    CHECK(written.regs[i2c_reg::kSa.index] == 0x68);
    for (Word i = 0; i < kI2cRegisterCount; ++i) {
        if (i != i2c_reg::kSa.index) CHECK(written.regs[i] == s.regs[i]);
    }

    // fixed-point write
    CHECK(delta_cpu(CpuOp::output(i2c_reg::kOa, 0), s) == s);

    CHECK_THROWS_AS(delta_cpu(CpuOp::input(RegAddr{10}), s), UnknownRegisterError);
    CHECK_THROWS_AS(delta_cpu(CpuOp::output(RegAddr{99}, 1), s), UnknownRegisterError);
}

TEST_CASE("cpu reads never mutate and writes touch at most the target: all registers") {
    I2cState s;
    for (Word i = 0; i < kI2cRegisterCount; ++i) s.regs[i] = 100 + i;
    for (Word i = 0; i < kI2cRegisterCount; ++i) {
        CHECK(delta_cpu(CpuOp::input(RegAddr{i}), s) == s);
        const I2cState w = delta_cpu(CpuOp::output(RegAddr{i}, 7), s);
        for (Word j = 0; j < kI2cRegisterCount; ++j) {
            CHECK(w.regs[j] == (j == i ? 7u : s.regs[j]));
        }
    }
    SpiState sp;
    for (Word i = 0; i < kSpiRegisterCount; ++i) sp.regs[i] = 200 + i;
    for (Word i = 0; i < kSpiRegisterCount; ++i) {
        CHECK(delta_cpu(CpuOp::input(RegAddr{i}), sp) == sp);
        const SpiState w = delta_cpu(CpuOp::output(RegAddr{i}, 9), sp);
        for (Word j = 0; j < kSpiRegisterCount; ++j) {
            CHECK(w.regs[j] == (j == i ? 9u : sp.regs[j]));
        }
    }
}

TEST_CASE("environment transition of the I2C bus") {
    const I2cState s = i2c_with(i2c_reg::kRxData, 0);
    CHECK(delta_env(I2cEvent::null(), s) == s);
    CHECK(delta_env(I2cEvent::ack(), s) == s);

    const I2cState recvd = delta_env(I2cEvent::recv(42), s);
    CHECK(recvd.regs[i2c_reg::kRxData.index] == 42);
    for (Word i = 0; i < kI2cRegisterCount; ++i) {
        if (i != i2c_reg::kRxData.index) CHECK(recvd.regs[i] == s.regs[i]);
    }
}

TEST_CASE("environment transition of the SPI bus") {
    SpiState s;
    CHECK(delta_env(SpiEvent::null(), s) == s);

    const SpiState done = delta_env(SpiEvent::xfer_done(), s);
    CHECK(done.tx_empty());

    const SpiState recvd = delta_env(SpiEvent::recv(99), s);
    CHECK(recvd.rx() == 99);
    CHECK(recvd.rx_full());
    for (Word i = 0; i < kSpiRegisterCount; ++i) {
        if (i != spi_reg::kRx.index && i != spi_reg::kRxFull.index) {
            CHECK(recvd.regs[i] == s.regs[i]);
        }
    }
}

TEST_CASE("next_event pops the pending prefix") {
    const I2cEventList env{I2cEvent::ack(), I2cEvent::recv(5)};
    const I2cEventLog log{I2cEvent::ack()};

    auto [e, extended] = next_event(env, log);
    CHECK(e == I2cEvent::recv(5));
    CHECK(extended == I2cEventList{I2cEvent::ack(), I2cEvent::recv(5)});

    // exhausted list: null event, log untouched
    auto [e2, log2] = next_event(I2cEventList{}, I2cEventLog{});
    CHECK(e2 == I2cEvent::null());
    CHECK(log2.empty());

    // first pop
    auto [e3, log3] = next_event(I2cEventList{I2cEvent::recv(7)}, I2cEventLog{});
    CHECK(e3 == I2cEvent::recv(7));
    CHECK(log3 == I2cEventList{I2cEvent::recv(7)});

    // prefix violation is harness misuse
    CHECK_THROWS_AS(next_event(env, I2cEventLog{I2cEvent::null()}), EventLogPrefixError);
}

TEST_CASE("kappa projects the addressed register") {
    CHECK(kappa(i2c_reg::kRxData, i2c_with(i2c_reg::kRxData, 42)) == 42);
    CHECK(kappa(i2c_reg::kSa, i2c_with(i2c_reg::kSa, 0x68)) == 0x68);
    CHECK(kappa(i2c_reg::kTxData, I2cState{}) == 0);  // reset value
    CHECK_THROWS_AS(kappa(RegAddr{10}, I2cState{}), UnknownRegisterError);
}

TEST_CASE("i2c read semantics") {
    // pending data lands in the buffer and is read out
    {
        auto r = read(i2c_reg::kRxData, I2cState{}, {}, {I2cEvent::recv(42)});
        CHECK(r.value == 42);
        CHECK(r.state.regs[i2c_reg::kRxData.index] == 42);
        CHECK(r.log == I2cEventLog{I2cEvent::recv(42)});
    }
    // exhausted list: pure readout
    {
        auto r = read(i2c_reg::kSa, i2c_with(i2c_reg::kSa, 9), {}, {});
        CHECK(r.value == 9);
        CHECK(r.state == i2c_with(i2c_reg::kSa, 9));
        CHECK(r.log.empty());
    }
    // acknowledgment is an identity: the readout sees the old buffer
    {
        auto r = read(i2c_reg::kRxData, i2c_with(i2c_reg::kRxData, 5), {}, {I2cEvent::ack()});
        CHECK(r.value == 5);
        CHECK(r.state == i2c_with(i2c_reg::kRxData, 5));
        CHECK(r.log == I2cEventLog{I2cEvent::ack()});
    }
    CHECK_THROWS_AS(read(RegAddr{12}, I2cState{}, {}, {}), UnknownRegisterError);
}

TEST_CASE("i2c write semantics") {
    // exhausted list: plain field update
    {
        auto r = write(i2c_reg::kTxData, 7, I2cState{}, {}, {});
        CHECK(r.state == i2c_with(i2c_reg::kTxData, 7));
        CHECK(r.log.empty());
    }
    // the environment transition fires before the CPU transition
    {
        auto r = write(i2c_reg::kSa, 0x68, I2cState{}, {}, {I2cEvent::recv(3)});
        CHECK(r.state.regs[i2c_reg::kRxData.index] == 3);
        CHECK(r.state.regs[i2c_reg::kSa.index] == 0x68);
        CHECK(r.log == I2cEventLog{I2cEvent::recv(3)});
    }
    // identity write plus null event: state unchanged, log extended
    {
        const I2cState s = i2c_with(i2c_reg::kOa, 4);
        auto r = write(i2c_reg::kOa, 4, s, {}, {I2cEvent::null()});
        CHECK(r.state == s);
        CHECK(r.log == I2cEventLog{I2cEvent::null()});
    }
}

TEST_CASE("spi read/write mirror the I2C semantics") {
    SpiState s;
    s.regs[spi_reg::kRx.index] = 1;
    auto r = read(spi_reg::kRx, s, {}, {});
    CHECK(r.value == 1);
    CHECK(r.state == s);
    CHECK(r.log.empty());

    auto w = write(spi_reg::kTx, 5, SpiState{}, {}, {SpiEvent::recv(9)});
    CHECK(w.state.rx() == 9);
    CHECK(w.state.rx_full());
    CHECK(w.state.tx() == 5);
}

TEST_CASE("fused read/write agree with the step-by-step oracle on small instances") {
    const std::vector<Word> values{0, 1, 2};
    const auto i2c_lists = oracle::all_i2c_lists(3, values);

    I2cState s0;
    for (Word i = 0; i < kI2cRegisterCount; ++i) s0.regs[i] = (i + 1) % 3;

    for (const auto& env : i2c_lists) {
        for (std::size_t log_len = 0; log_len <= env.size(); ++log_len) {
            const I2cEventLog log(env.begin(), env.begin() + static_cast<std::ptrdiff_t>(log_len));
            for (Word reg = 0; reg < kI2cRegisterCount; ++reg) {
                CHECK(read(RegAddr{reg}, s0, log, env) ==
                      oracle::i2c_read_steps(RegAddr{reg}, s0, log, env));
                CHECK(write(RegAddr{reg}, 2, s0, log, env) ==
                      oracle::i2c_write_steps(RegAddr{reg}, 2, s0, log, env));
            }
        }
    }

    const auto spi_lists = oracle::all_spi_lists(3, values);
    SpiState sp0;
    for (Word i = 0; i < kSpiRegisterCount; ++i) sp0.regs[i] = i % 2;
    for (const auto& env : spi_lists) {
        for (std::size_t log_len = 0; log_len <= env.size(); ++log_len) {
            const SpiEventLog log(env.begin(), env.begin() + static_cast<std::ptrdiff_t>(log_len));
            for (Word reg = 0; reg < kSpiRegisterCount; reg += 3) {
                CHECK(read(RegAddr{reg}, sp0, log, env) ==
                      oracle::spi_read_steps(RegAddr{reg}, sp0, log, env));
                CHECK(write(RegAddr{reg}, 1, sp0, log, env) ==
                      oracle::spi_write_steps(RegAddr{reg}, 1, sp0, log, env));
            }
        }
    }
}

TEST_CASE("log stays a prefix of the list through every read/write") {
    const std::vector<Word> values{0, 1, 2};
    for (const auto& env : oracle::all_i2c_lists(4, values)) {
        I2cState s;
        I2cEventLog log;
        // drain the list via alternating reads and writes
        for (std::size_t step = 0; step < env.size() + 2; ++step) {
            if (step % 2 == 0) {
                auto r = read(i2c_reg::kRxData, s, log, env);
                s = r.state;
                log = r.log;
            } else {
                auto w = write(i2c_reg::kCon, static_cast<Word>(step), s, log, env);
                s = w.state;
                log = w.log;
            }
            CHECK(is_prefix(log, env));
        }
        CHECK(log.size() == env.size());
    }
}

TEST_CASE("read/write are deterministic") {
    const I2cEventList env{I2cEvent::recv(1), I2cEvent::ack(), I2cEvent::recv(2)};
    const I2cState s = i2c_with(i2c_reg::kCnt, 77);
    const auto a = read(i2c_reg::kRxData, s, {}, env);
    const auto b = read(i2c_reg::kRxData, s, {}, env);
    CHECK(a == b);
    const auto wa = write(i2c_reg::kBuf, 3, s, {}, env);
    const auto wb = write(i2c_reg::kBuf, 3, s, {}, env);
    CHECK(wa == wb);
}
