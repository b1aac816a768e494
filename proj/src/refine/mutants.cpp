#include "certibus/refine/mutants.hpp"

#include <stdexcept>

namespace certibus::refine {

namespace {

using driver::Args;
using driver::Machine;
using driver::Primitive;
using driver::Ret;
using driver::Word;
namespace sr = bus::spi_reg;

Primitive& find_mutable(driver::Registry& reg, const std::string& layer,
                        const std::string& primitive) {
    for (auto& l : reg.layers) {
        if (l.layer != layer) continue;
        for (auto& p : l.primitives) {
            if (p.name == primitive) return p;
        }
    }
    throw std::logic_error("mutant target not found: " + layer + "/" + primitive);
}

}  // namespace

const std::vector<MutantId>& all_mutants() {
    static const std::vector<MutantId> ids = {
        MutantId::WrongRegisterLowspec, MutantId::DroppedWrite,     MutantId::SwappedArguments,
        MutantId::SkippedLayer,         MutantId::LogTruncation,    MutantId::MissingEnvTransition,
        MutantId::ReorderedReadSteps,   MutantId::UnboundedPoll,    MutantId::LinkedWrongRegister,
    };
    return ids;
}

std::string to_string(MutantId id) {
    switch (id) {
        case MutantId::WrongRegisterLowspec: return "wrong-register";
        case MutantId::DroppedWrite: return "dropped-write";
        case MutantId::SwappedArguments: return "swapped-arguments";
        case MutantId::SkippedLayer: return "skipped-layer";
        case MutantId::LogTruncation: return "log-truncation";
        case MutantId::MissingEnvTransition: return "missing-env-transition";
        case MutantId::ReorderedReadSteps: return "reordered-read-steps";
        case MutantId::UnboundedPoll: return "unbounded-poll";
        case MutantId::LinkedWrongRegister: return "linked-wrong-register";
    }
    throw std::logic_error("unknown mutant id");
}

std::optional<MutantId> mutant_from_string(const std::string& name) {
    for (MutantId id : all_mutants()) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

void apply_mutant(driver::Registry& reg, MutantId id) {
    switch (id) {
        case MutantId::WrongRegisterLowspec: {
            auto& p = find_mutable(reg, "DSpiEnChannel", "mcspi_enable_channel");
            p.low = [](const driver::MemoryState& mem, const driver::AbstractState& a,
                       const Args&) -> std::optional<driver::LowStep> {
                if (a.spi.ms() != bus::SpiMs::Master) return std::nullopt;
                auto s = driver::spec::low_spi_write({mem, a}, driver::kEnableChannel, sr::kTx);
                return driver::LowStep{std::move(s.mem), std::move(s.abs), {}};
            };
            break;
        }
        case MutantId::DroppedWrite: {
            auto& p = find_mutable(reg, "DSpiSelChannel", "mcspi_select_channel");
            p.impl = [](Machine& m, const Args& args) -> Ret {
                if (args[0] != 0) {
                    driver::spi_reg_write(m, 1, sr::kEn);
                    driver::mcspi_enable_channel(m);
                } else {
                    driver::mcspi_disable_channel(m);
                }
                return {};
            };
            break;
        }
        case MutantId::SwappedArguments: {
            auto& p = find_mutable(reg, "DSpiInOut", "spi_write_register");
            p.impl = [](Machine& m, const Args& args) -> Ret {
                driver::spi_reg_write(m, args[1], driver::RegAddr{args[0]});
                return {};
            };
            break;
        }
        case MutantId::SkippedLayer: {
            auto& p = find_mutable(reg, "DSpiInit", "mcspi_init");
            p.impl = [](Machine& m, const Args&) -> Ret {
                driver::spi_reg_write(m, 0, sr::kMs);
                driver::mcspi_enable_channel(m);
                return {};
            };
            break;
        }
        case MutantId::LogTruncation: {
            auto& p = find_mutable(reg, "DSpiEnChannel", "mcspi_enable_channel");
            p.high = [](const driver::AbstractState& a,
                        const Args&) -> std::optional<driver::HighStep> {
                auto r = driver::spec::high_enable_channel(a);
                if (!r) return std::nullopt;
                if (!r->spi_log.empty()) r->spi_log.pop_back();
                return driver::HighStep{std::move(*r), {}};
            };
            break;
        }
        case MutantId::MissingEnvTransition: {
            auto& p = find_mutable(reg, "DI2cInOut", "i2c_read_register");
            p.impl = [](Machine& m, const Args& args) -> Ret {
                driver::RegAddr addr{args[0]};
                if (!bus::i2c_has_register(addr)) throw bus::UnknownRegisterError("I2C", addr.index);
                ++m.i2c_bus_ops;
                // pops the pending event without applying its transition
                if (m.abs.i2c_log.size() < m.abs.i2c_env.size()) {
                    m.abs.i2c_log.push_back(m.abs.i2c_env[m.abs.i2c_log.size()]);
                    ++m.abs.clock;
                }
                return {m.abs.i2c.regs[addr.index]};
            };
            break;
        }
        case MutantId::ReorderedReadSteps: {
            auto& p = find_mutable(reg, "DSpiInOut", "spi_read_register");
            p.impl = [](Machine& m, const Args& args) -> Ret {
                driver::RegAddr addr{args[0]};
                if (!bus::spi_has_register(addr)) throw bus::UnknownRegisterError("SPI", addr.index);
                ++m.spi_bus_ops;
                // projects the register before the environment transition
                const Word value = m.abs.spi.regs[addr.index];
                if (m.abs.spi_log.size() < m.abs.spi_env.size()) {
                    const bus::SpiEvent& e = m.abs.spi_env[m.abs.spi_log.size()];
                    m.abs.spi = bus::delta_env(e, m.abs.spi);
                    m.abs.spi_log.push_back(e);
                    ++m.abs.clock;
                } else {
                    m.spi_hit_exhausted = true;
                }
                return {value};
            };
            break;
        }
        case MutantId::UnboundedPoll: {
            auto& p = find_mutable(reg, "DSpiXfer", "spi_transfer");
            p.impl = [](Machine& m, const Args& args) -> Ret {
                driver::TransferResult r =
                    driver::spi_transfer(m, args[0], driver::Variant::Verified, 64);
                return {static_cast<Word>(r.status), r.value};
            };
            break;
        }
        case MutantId::LinkedWrongRegister: {
            auto& p = find_mutable(reg, "DSpiSelChannel", "mcspi_select_channel");
            p.impl = [](Machine& m, const Args& args) -> Ret {
                if (args[0] != 0) {
                    driver::spi_reg_write(m, driver::kCh0ConfSelect, sr::kCh0Stat);
                    driver::spi_reg_write(m, 1, sr::kEn);
                    driver::mcspi_enable_channel(m);
                } else {
                    driver::mcspi_disable_channel(m);
                }
                return {};
            };
            break;
        }
    }
}

driver::Registry build_mutant_registry(MutantId id, const driver::DriverConfig& cfg) {
    driver::Registry reg = driver::build_registry(cfg);
    apply_mutant(reg, id);
    return reg;
}

}  // namespace certibus::refine
