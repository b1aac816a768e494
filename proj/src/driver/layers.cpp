#include "certibus/driver/layers.hpp"

#include <algorithm>
#include <map>

namespace certibus::driver {

namespace {
namespace sr = bus::spi_reg;
namespace ir = bus::i2c_reg;
}  // namespace

namespace spec {

AbstractState high_spi_write(AbstractState a, Word v, RegAddr addr) {
    const std::size_t before = a.spi_log.size();
    auto r = bus::write(addr, v, a.spi, a.spi_log, a.spi_env);
    a.clock += r.log.size() - before;
    a.spi = r.state;
    a.spi_log = std::move(r.log);
    return a;
}

std::pair<AbstractState, Word> high_spi_read(AbstractState a, RegAddr addr) {
    const std::size_t before = a.spi_log.size();
    auto r = bus::read(addr, a.spi, a.spi_log, a.spi_env);
    a.clock += r.log.size() - before;
    a.spi = r.state;
    a.spi_log = std::move(r.log);
    return {std::move(a), r.value};
}

AbstractState high_i2c_write(AbstractState a, Word v, RegAddr addr) {
    const std::size_t before = a.i2c_log.size();
    auto r = bus::write(addr, v, a.i2c, a.i2c_log, a.i2c_env);
    a.clock += r.log.size() - before;
    a.i2c = r.state;
    a.i2c_log = std::move(r.log);
    return a;
}

std::pair<AbstractState, Word> high_i2c_read(AbstractState a, RegAddr addr) {
    const std::size_t before = a.i2c_log.size();
    auto r = bus::read(addr, a.i2c, a.i2c_log, a.i2c_env);
    a.clock += r.log.size() - before;
    a.i2c = r.state;
    a.i2c_log = std::move(r.log);
    return {std::move(a), r.value};
}

LowPair low_spi_write(LowPair s, Word v, RegAddr addr) {
    if (!bus::spi_has_register(addr)) throw bus::UnknownRegisterError("SPI", addr.index);
    auto [e, extended] = bus::next_event(s.abs.spi_env, s.abs.spi_log);
    s.abs.clock += extended.size() - s.abs.spi_log.size();
    s.abs.spi_log = std::move(extended);
    s.abs.spi = bus::delta_env(e, s.abs.spi);
    s.abs.spi = bus::delta_cpu(bus::CpuOp::output(addr, v), s.abs.spi);
    s.mem.set_cell(spi_mmio(addr), v);
    return s;
}

std::pair<LowPair, Word> low_spi_read(LowPair s, RegAddr addr) {
    if (!bus::spi_has_register(addr)) throw bus::UnknownRegisterError("SPI", addr.index);
    auto [e, extended] = bus::next_event(s.abs.spi_env, s.abs.spi_log);
    s.abs.clock += extended.size() - s.abs.spi_log.size();
    s.abs.spi_log = std::move(extended);
    s.abs.spi = bus::delta_env(e, s.abs.spi);
    const Word res = bus::kappa(addr, s.abs.spi);
    s.abs.spi = bus::delta_cpu(bus::CpuOp::input(addr), s.abs.spi);
    return {std::move(s), res};
}

LowPair low_i2c_write(LowPair s, Word v, RegAddr addr) {
    if (!bus::i2c_has_register(addr)) throw bus::UnknownRegisterError("I2C", addr.index);
    auto [e, extended] = bus::next_event(s.abs.i2c_env, s.abs.i2c_log);
    s.abs.clock += extended.size() - s.abs.i2c_log.size();
    s.abs.i2c_log = std::move(extended);
    s.abs.i2c = bus::delta_env(e, s.abs.i2c);
    s.abs.i2c = bus::delta_cpu(bus::CpuOp::output(addr, v), s.abs.i2c);
    s.mem.set_cell(i2c_mmio(addr), v);
    return s;
}

std::pair<LowPair, Word> low_i2c_read(LowPair s, RegAddr addr) {
    if (!bus::i2c_has_register(addr)) throw bus::UnknownRegisterError("I2C", addr.index);
    auto [e, extended] = bus::next_event(s.abs.i2c_env, s.abs.i2c_log);
    s.abs.clock += extended.size() - s.abs.i2c_log.size();
    s.abs.i2c_log = std::move(extended);
    s.abs.i2c = bus::delta_env(e, s.abs.i2c);
    const Word res = bus::kappa(addr, s.abs.i2c);
    s.abs.i2c = bus::delta_cpu(bus::CpuOp::input(addr), s.abs.i2c);
    return {std::move(s), res};
}

// Channel control is a master-mode operation; states in slave mode are
// outside these primitives' domains.
std::optional<AbstractState> high_enable_channel(const AbstractState& a) {
    if (a.spi.ms() != bus::SpiMs::Master) return std::nullopt;
    return high_spi_write(a, kEnableChannel, sr::kCh0Ctrl);
}

std::optional<AbstractState> high_disable_channel(const AbstractState& a) {
    if (a.spi.ms() != bus::SpiMs::Master) return std::nullopt;
    return high_spi_write(a, 0, sr::kCh0Ctrl);
}

std::optional<AbstractState> high_select_channel(const AbstractState& a, bool enable) {
    if (a.spi.ms() != bus::SpiMs::Master) return std::nullopt;
    if (!enable) return high_disable_channel(a);
    AbstractState b = high_spi_write(a, kCh0ConfSelect, sr::kCh0Conf);
    b = high_spi_write(std::move(b), 1, sr::kEn);
    return high_enable_channel(b);
}

std::optional<AbstractState> high_init(const AbstractState& a) {
    AbstractState b = high_spi_write(a, 0, sr::kMs);
    return high_select_channel(b, true);
}

std::optional<TransferStep> high_transfer(const AbstractState& a0, Word tx, unsigned k_poll) {
    if (!a0.spi.ch0_enabled()) return std::nullopt;
    AbstractState a = high_spi_write(a0, tx, sr::kTx);
    unsigned polls = 0;
    for (;;) {
        if (polls == k_poll) {
            return TransferStep{std::move(a), {TransferResult::Status::TimedOut, 0}, polls};
        }
        auto [a1, full] = high_spi_read(std::move(a), sr::kRxFull);
        a = std::move(a1);
        ++polls;
        if (full != 0) {
            auto [a2, value] = high_spi_read(std::move(a), sr::kRx);
            a = high_spi_write(std::move(a2), 0, sr::kRxFull);
            return TransferStep{std::move(a), {TransferResult::Status::Ok, value}, polls};
        }
    }
}

std::optional<LowPair> low_enable_channel(const LowPair& s) {
    if (s.abs.spi.ms() != bus::SpiMs::Master) return std::nullopt;
    return low_spi_write(s, kEnableChannel, sr::kCh0Ctrl);
}

std::optional<LowPair> low_disable_channel(const LowPair& s) {
    if (s.abs.spi.ms() != bus::SpiMs::Master) return std::nullopt;
    return low_spi_write(s, 0, sr::kCh0Ctrl);
}

std::optional<LowPair> low_select_channel(const LowPair& s, bool enable) {
    if (s.abs.spi.ms() != bus::SpiMs::Master) return std::nullopt;
    if (!enable) return low_disable_channel(s);
    LowPair t = low_spi_write(s, kCh0ConfSelect, sr::kCh0Conf);
    t = low_spi_write(std::move(t), 1, sr::kEn);
    return low_enable_channel(t);
}

std::optional<LowPair> low_init(const LowPair& s) {
    LowPair t = low_spi_write(s, 0, sr::kMs);
    return low_select_channel(t, true);
}

std::optional<LowTransferStep> low_transfer(const LowPair& s0, Word tx, unsigned k_poll) {
    if (!s0.abs.spi.ch0_enabled()) return std::nullopt;
    LowPair s = low_spi_write(s0, tx, sr::kTx);
    unsigned polls = 0;
    for (;;) {
        if (polls == k_poll) {
            s.mem.set_cell(kScratchXferPolls, polls);
            return LowTransferStep{std::move(s), {TransferResult::Status::TimedOut, 0}};
        }
        auto [s1, full] = low_spi_read(std::move(s), sr::kRxFull);
        s = std::move(s1);
        ++polls;
        if (full != 0) {
            auto [s2, value] = low_spi_read(std::move(s), sr::kRx);
            s = low_spi_write(std::move(s2), 0, sr::kRxFull);
            s.mem.set_cell(kScratchXferPolls, polls);
            return LowTransferStep{std::move(s), {TransferResult::Status::Ok, value}};
        }
    }
}

}  // namespace spec

namespace {

using spec::LowPair;

Word normalize_count_word(Word w) { return pack_count(unpack_count(w)); }

struct HighImu {
    AbstractState abs;
    Ret ret;  // {stale, gx, gy, gz, ax, ay, az} with packed counts
};

std::optional<HighImu> high_imu(const AbstractState& a0, unsigned k_poll) {
    if (!a0.spi.ch0_enabled()) return std::nullopt;
    AbstractState a = a0;
    Ret ret(7, 0);
    for (std::size_t axis = 0; axis < 6; ++axis) {
        auto t = spec::high_transfer(a, kImuChannelCmd[axis], k_poll);
        if (!t) return std::nullopt;
        a = std::move(t->abs);
        if (t->result.status == TransferResult::Status::TimedOut) {
            return HighImu{std::move(a), Ret{1, 0, 0, 0, 0, 0, 0}};
        }
        ret[axis + 1] = normalize_count_word(t->result.value);
    }
    return HighImu{std::move(a), std::move(ret)};
}

struct LowImu {
    LowPair state;
    Ret ret;
};

std::optional<LowImu> low_imu(const LowPair& s0, unsigned k_poll) {
    if (!s0.abs.spi.ch0_enabled()) return std::nullopt;
    LowPair s = s0;
    Ret ret(7, 0);
    for (std::size_t axis = 0; axis < 6; ++axis) {
        auto t = spec::low_transfer(s, kImuChannelCmd[axis], k_poll);
        if (!t) return std::nullopt;
        s = std::move(t->state);
        if (t->result.status == TransferResult::Status::TimedOut) {
            return LowImu{std::move(s), Ret{1, 0, 0, 0, 0, 0, 0}};
        }
        ret[axis + 1] = normalize_count_word(t->result.value);
    }
    return LowImu{std::move(s), std::move(ret)};
}

std::pair<AbstractState, Ret> high_mag(const AbstractState& a0) {
    AbstractState a = spec::high_i2c_write(a0, kMagSlaveAddr, ir::kSa);
    a = spec::high_i2c_write(std::move(a), kMagDataReg, ir::kTxData);
    Ret ret(3, 0);
    for (std::size_t axis = 0; axis < 3; ++axis) {
        auto [a1, v] = spec::high_i2c_read(std::move(a), ir::kRxData);
        a = std::move(a1);
        ret[axis] = normalize_count_word(v);
    }
    return {std::move(a), std::move(ret)};
}

std::pair<LowPair, Ret> low_mag(const LowPair& s0) {
    LowPair s = spec::low_i2c_write(s0, kMagSlaveAddr, ir::kSa);
    s = spec::low_i2c_write(std::move(s), kMagDataReg, ir::kTxData);
    Ret ret(3, 0);
    for (std::size_t axis = 0; axis < 3; ++axis) {
        auto [s1, v] = spec::low_i2c_read(std::move(s), ir::kRxData);
        s = std::move(s1);
        ret[axis] = normalize_count_word(v);
    }
    return {std::move(s), std::move(ret)};
}

std::vector<Word> all_spi_indices() {
    std::vector<Word> v(bus::kSpiRegisterCount);
    for (Word i = 0; i < bus::kSpiRegisterCount; ++i) v[i] = i;
    return v;
}

std::vector<Word> all_i2c_indices() {
    std::vector<Word> v(bus::kI2cRegisterCount);
    for (Word i = 0; i < bus::kI2cRegisterCount; ++i) v[i] = i;
    return v;
}

const std::vector<Word> kWordSamples = {0, 1, 0xFFFFFFFFu};
const std::vector<Word> kBoolValues = {0, 1};

HighStep make_high(AbstractState abs, Ret ret = {}) { return HighStep{std::move(abs), std::move(ret)}; }
LowStep make_low(LowPair s, Ret ret = {}) {
    return LowStep{std::move(s.mem), std::move(s.abs), std::move(ret)};
}

LayerSpec make_layer(std::string layer, std::string stack, int level, std::string module,
                     std::vector<std::string> depends, StateDomain domain) {
    LayerSpec l;
    l.layer = std::move(layer);
    l.stack = std::move(stack);
    l.level = level;
    l.module = std::move(module);
    l.depends = std::move(depends);
    l.relation = default_relation;
    l.invariant = default_invariant;
    l.domain = std::move(domain);
    return l;
}

}  // namespace

Registry build_registry(const DriverConfig& cfg) {
    const unsigned k_poll = cfg.k_poll;
    Registry reg;
    reg.k_poll = k_poll;

    // --- SPI stack -------------------------------------------------------

    {
        LayerSpec l = make_layer("DSpiInOut", "spi", 0, "RegRW", {},
                                 StateDomain{.spi_flags = {sr::kRxFull},
                                             .spi_words = {sr::kRx, sr::kTx},
                                             .spi_env_len = 4});
        l.primitives.push_back(Primitive{
            "spi_read_register",
            {{"addr", all_spi_indices()}},
            [](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                auto [a2, v] = spec::high_spi_read(a, RegAddr{args[0]});
                return make_high(std::move(a2), {v});
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args& args) -> std::optional<LowStep> {
                auto [s2, v] = spec::low_spi_read(LowPair{mem, a}, RegAddr{args[0]});
                return make_low(std::move(s2), {v});
            },
            [](Machine& m, const Args& args) -> Ret { return {spi_reg_read(m, RegAddr{args[0]})}; },
        });
        l.primitives.push_back(Primitive{
            "spi_write_register",
            {{"value", kWordSamples}, {"addr", all_spi_indices()}},
            [](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                return make_high(spec::high_spi_write(a, args[0], RegAddr{args[1]}));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args& args) -> std::optional<LowStep> {
                return make_low(spec::low_spi_write(LowPair{mem, a}, args[0], RegAddr{args[1]}));
            },
            [](Machine& m, const Args& args) -> Ret {
                spi_reg_write(m, args[0], RegAddr{args[1]});
                return {};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DSpiEnChannel", "spi", 1, "CH0EN", {"RegRW"},
                                 StateDomain{.spi_flags = {sr::kMs, sr::kCh0Ctrl},
                                             .spi_words = {sr::kCh0Conf},
                                             .spi_env_len = 4});
        l.primitives.push_back(Primitive{
            "mcspi_enable_channel",
            {},
            [](const AbstractState& a, const Args&) -> std::optional<HighStep> {
                auto r = spec::high_enable_channel(a);
                if (!r) return std::nullopt;
                return make_high(std::move(*r));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args&) -> std::optional<LowStep> {
                auto r = spec::low_enable_channel(LowPair{mem, a});
                if (!r) return std::nullopt;
                return make_low(std::move(*r));
            },
            [](Machine& m, const Args&) -> Ret {
                mcspi_enable_channel(m);
                return {};
            },
        });
        l.primitives.push_back(Primitive{
            "mcspi_disable_channel",
            {},
            [](const AbstractState& a, const Args&) -> std::optional<HighStep> {
                auto r = spec::high_disable_channel(a);
                if (!r) return std::nullopt;
                return make_high(std::move(*r));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args&) -> std::optional<LowStep> {
                auto r = spec::low_disable_channel(LowPair{mem, a});
                if (!r) return std::nullopt;
                return make_low(std::move(*r));
            },
            [](Machine& m, const Args&) -> Ret {
                mcspi_disable_channel(m);
                return {};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DSpiSelChannel", "spi", 2, "CH0SELECT", {"CH0EN", "RegRW"},
                                 StateDomain{.spi_flags = {sr::kMs, sr::kCh0Ctrl, sr::kEn},
                                             .spi_words = {sr::kCh0Conf},
                                             .spi_env_len = 4});
        l.primitives.push_back(Primitive{
            "mcspi_select_channel",
            {{"enable", kBoolValues}},
            [](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                auto r = spec::high_select_channel(a, args[0] != 0);
                if (!r) return std::nullopt;
                return make_high(std::move(*r));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args& args) -> std::optional<LowStep> {
                auto r = spec::low_select_channel(LowPair{mem, a}, args[0] != 0);
                if (!r) return std::nullopt;
                return make_low(std::move(*r));
            },
            [](Machine& m, const Args& args) -> Ret {
                mcspi_select_channel(m, args[0] != 0);
                return {};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DSpiInit", "spi", 3, "SPIINIT", {"CH0SELECT", "RegRW"},
                                 StateDomain{.spi_flags = {sr::kMs, sr::kCh0Ctrl, sr::kEn},
                                             .spi_words = {sr::kCh0Conf},
                                             .spi_env_len = 4});
        l.primitives.push_back(Primitive{
            "mcspi_init",
            {},
            [](const AbstractState& a, const Args&) -> std::optional<HighStep> {
                auto r = spec::high_init(a);
                if (!r) return std::nullopt;
                return make_high(std::move(*r));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args&) -> std::optional<LowStep> {
                auto r = spec::low_init(LowPair{mem, a});
                if (!r) return std::nullopt;
                return make_low(std::move(*r));
            },
            [](Machine& m, const Args&) -> Ret {
                mcspi_init(m);
                return {};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DSpiXfer", "spi", 4, "XFER", {"RegRW"},
                                 StateDomain{.spi_flags = {sr::kCh0Ctrl, sr::kRxFull},
                                             .spi_words = {sr::kRx, sr::kTx},
                                             .spi_env_len = 4});
        l.bounded_poll_check = true;
        l.k_poll = k_poll;
        l.primitives.push_back(Primitive{
            "spi_transfer",
            {{"tx", kWordSamples}},
            [k_poll](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                auto r = spec::high_transfer(a, args[0], k_poll);
                if (!r) return std::nullopt;
                return make_high(std::move(r->abs),
                                 {static_cast<Word>(r->result.status), r->result.value});
            },
            [k_poll](const MemoryState& mem, const AbstractState& a,
                     const Args& args) -> std::optional<LowStep> {
                auto r = spec::low_transfer(LowPair{mem, a}, args[0], k_poll);
                if (!r) return std::nullopt;
                return make_low(std::move(r->state),
                                {static_cast<Word>(r->result.status), r->result.value});
            },
            [k_poll](Machine& m, const Args& args) -> Ret {
                TransferResult r = spi_transfer(m, args[0], Variant::Verified, k_poll);
                return {static_cast<Word>(r.status), r.value};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DSpiDev", "spi", 5, "IMUREAD", {"XFER"},
                                 StateDomain{.spi_flags = {sr::kCh0Ctrl, sr::kRxFull},
                                             .spi_words = {sr::kRx},
                                             .spi_env_len = 4});
        l.primitives.push_back(Primitive{
            "imu_read_sample",
            {},
            [k_poll](const AbstractState& a, const Args&) -> std::optional<HighStep> {
                auto r = high_imu(a, k_poll);
                if (!r) return std::nullopt;
                return make_high(std::move(r->abs), std::move(r->ret));
            },
            [k_poll](const MemoryState& mem, const AbstractState& a,
                     const Args&) -> std::optional<LowStep> {
                auto r = low_imu(LowPair{mem, a}, k_poll);
                if (!r) return std::nullopt;
                return make_low(std::move(r->state), std::move(r->ret));
            },
            [k_poll](Machine& m, const Args&) -> Ret {
                ImuSample s = imu_read_sample(m, Variant::Verified, k_poll);
                Ret ret(7, 0);
                ret[0] = s.stale ? 1 : 0;
                if (!s.stale) {
                    for (std::size_t i = 0; i < 3; ++i) ret[1 + i] = pack_count(s.gyro[i]);
                    for (std::size_t i = 0; i < 3; ++i) ret[4 + i] = pack_count(s.accel[i]);
                }
                return ret;
            },
        });
        reg.layers.push_back(std::move(l));
    }

    // --- I2C stack -------------------------------------------------------

    {
        LayerSpec l = make_layer("DI2cInOut", "i2c", 0, "I2CRegRW", {},
                                 StateDomain{.i2c_words = {ir::kRxData, ir::kSa},
                                             .i2c_env_len = 4});
        l.primitives.push_back(Primitive{
            "i2c_read_register",
            {{"addr", all_i2c_indices()}},
            [](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                auto [a2, v] = spec::high_i2c_read(a, RegAddr{args[0]});
                return make_high(std::move(a2), {v});
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args& args) -> std::optional<LowStep> {
                auto [s2, v] = spec::low_i2c_read(LowPair{mem, a}, RegAddr{args[0]});
                return make_low(std::move(s2), {v});
            },
            [](Machine& m, const Args& args) -> Ret { return {i2c_reg_read(m, RegAddr{args[0]})}; },
        });
        l.primitives.push_back(Primitive{
            "i2c_write_register",
            {{"value", kWordSamples}, {"addr", all_i2c_indices()}},
            [](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                return make_high(spec::high_i2c_write(a, args[0], RegAddr{args[1]}));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args& args) -> std::optional<LowStep> {
                return make_low(spec::low_i2c_write(LowPair{mem, a}, args[0], RegAddr{args[1]}));
            },
            [](Machine& m, const Args& args) -> Ret {
                i2c_reg_write(m, args[0], RegAddr{args[1]});
                return {};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DI2cAddr", "i2c", 1, "I2CADDR", {"I2CRegRW"},
                                 StateDomain{.i2c_words = {ir::kSa}, .i2c_env_len = 4});
        l.primitives.push_back(Primitive{
            "i2c_set_slave",
            {{"slave", kWordSamples}},
            [](const AbstractState& a, const Args& args) -> std::optional<HighStep> {
                return make_high(spec::high_i2c_write(a, args[0], ir::kSa));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args& args) -> std::optional<LowStep> {
                return make_low(spec::low_i2c_write(LowPair{mem, a}, args[0], ir::kSa));
            },
            [](Machine& m, const Args& args) -> Ret {
                i2c_set_slave(m, args[0]);
                return {};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    {
        LayerSpec l = make_layer("DI2cDev", "i2c", 2, "MAGREAD", {"I2CADDR", "I2CRegRW"},
                                 StateDomain{.i2c_words = {ir::kRxData}, .i2c_env_len = 4});
        l.primitives.push_back(Primitive{
            "mag_read_sample",
            {},
            [](const AbstractState& a, const Args&) -> std::optional<HighStep> {
                auto [a2, ret] = high_mag(a);
                return make_high(std::move(a2), std::move(ret));
            },
            [](const MemoryState& mem, const AbstractState& a,
               const Args&) -> std::optional<LowStep> {
                auto [s2, ret] = low_mag(LowPair{mem, a});
                return make_low(std::move(s2), std::move(ret));
            },
            [](Machine& m, const Args&) -> Ret {
                MagSample s = mag_read_sample(m);
                return {pack_count(s.field[0]), pack_count(s.field[1]), pack_count(s.field[2])};
            },
        });
        reg.layers.push_back(std::move(l));
    }

    std::stable_sort(reg.layers.begin(), reg.layers.end(),
                     [](const LayerSpec& a, const LayerSpec& b) {
                         if (a.level != b.level) return a.level < b.level;
                         return a.layer < b.layer;
                     });
    return reg;
}

bool layer_dag_ok(const Registry& reg) {
    std::map<std::string, int> module_level;
    for (const auto& l : reg.layers) module_level[l.module] = l.level;
    for (const auto& l : reg.layers) {
        for (const auto& dep : l.depends) {
            auto it = module_level.find(dep);
            if (it == module_level.end()) return false;
            if (it->second >= l.level) return false;
        }
    }
    return true;
}

std::string format_layer_table(const Registry& reg) {
    std::string out;
    for (const auto& l : reg.layers) {
        out += std::to_string(l.level);
        out += '\t';
        out += l.layer;
        out += '\t';
        out += l.module;
        out += '\t';
        if (l.depends.empty()) {
            out += '-';
        } else {
            for (std::size_t i = 0; i < l.depends.size(); ++i) {
                if (i) out += ',';
                out += l.depends[i];
            }
        }
        out += '\n';
    }
    return out;
}

const Primitive* find_primitive(const Registry& reg, const std::string& name, int max_level) {
    for (const auto& l : reg.layers) {
        if (l.level > max_level) continue;
        for (const auto& p : l.primitives) {
            if (p.name == name) return &p;
        }
    }
    return nullptr;
}

const LayerSpec* find_layer(const Registry& reg, const std::string& layer) {
    for (const auto& l : reg.layers) {
        if (l.layer == layer) return &l;
    }
    return nullptr;
}

std::vector<std::pair<const LayerSpec*, const LayerSpec*>> adjacent_pairs(const Registry& reg) {
    std::vector<std::pair<const LayerSpec*, const LayerSpec*>> pairs;
    for (const auto& upper : reg.layers) {
        for (const auto& lower : reg.layers) {
            if (lower.stack == upper.stack && lower.level + 1 == upper.level) {
                pairs.emplace_back(&lower, &upper);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        if (a.second->level != b.second->level) return a.second->level < b.second->level;
        return a.second->layer < b.second->layer;
    });
    return pairs;
}

}  // namespace certibus::driver
