#include "certibus/driver/state.hpp"

#include <stdexcept>

namespace certibus::driver {

std::optional<std::size_t> MemoryState::slot(Word addr) {
    if (addr >= kI2cMmioBase && addr < kI2cMmioBase + bus::kI2cRegisterCount) {
        return addr - kI2cMmioBase;
    }
    if (addr >= kSpiMmioBase && addr < kSpiMmioBase + bus::kSpiRegisterCount) {
        return bus::kI2cRegisterCount + (addr - kSpiMmioBase);
    }
    if (addr == kScratchXferPolls) {
        return bus::kI2cRegisterCount + bus::kSpiRegisterCount;
    }
    return std::nullopt;
}

const std::vector<Word>& MemoryState::domain() {
    static const std::vector<Word> addrs = [] {
        std::vector<Word> v;
        for (std::size_t i = 0; i < bus::kI2cRegisterCount; ++i) v.push_back(kI2cMmioBase + i);
        for (std::size_t i = 0; i < bus::kSpiRegisterCount; ++i) v.push_back(kSpiMmioBase + i);
        v.push_back(kScratchXferPolls);
        return v;
    }();
    return addrs;
}

Word MemoryState::cell(Word addr) const {
    auto s = slot(addr);
    if (!s) throw std::out_of_range("address outside driver memory domain");
    return cells[*s];
}

void MemoryState::set_cell(Word addr, Word value) {
    auto s = slot(addr);
    if (!s) throw std::out_of_range("address outside driver memory domain");
    cells[*s] = value;
}

bool is_volatile_spi_reg(RegAddr addr) {
    return addr == bus::spi_reg::kRx || addr == bus::spi_reg::kRxFull ||
           addr == bus::spi_reg::kTxEmpty;
}

bool is_volatile_i2c_reg(RegAddr addr) { return addr == bus::i2c_reg::kRxData; }

MemoryState shadow_memory(const AbstractState& abs) {
    MemoryState mem;
    for (std::size_t i = 0; i < bus::kI2cRegisterCount; ++i) {
        mem.set_cell(kI2cMmioBase + static_cast<Word>(i), abs.i2c.regs[i]);
    }
    for (std::size_t i = 0; i < bus::kSpiRegisterCount; ++i) {
        mem.set_cell(kSpiMmioBase + static_cast<Word>(i), abs.spi.regs[i]);
    }
    return mem;
}

bool default_relation(const AbstractState& abs, const MemoryState& mem) {
    for (std::size_t i = 0; i < bus::kI2cRegisterCount; ++i) {
        RegAddr r{static_cast<Word>(i)};
        if (is_volatile_i2c_reg(r)) continue;
        if (mem.cell(i2c_mmio(r)) != abs.i2c.regs[i]) return false;
    }
    for (std::size_t i = 0; i < bus::kSpiRegisterCount; ++i) {
        RegAddr r{static_cast<Word>(i)};
        if (is_volatile_spi_reg(r)) continue;
        if (mem.cell(spi_mmio(r)) != abs.spi.regs[i]) return false;
    }
    return true;
}

bool default_invariant(const AbstractState& abs) {
    if (!bus::is_prefix(abs.spi_log, abs.spi_env)) return false;
    if (!bus::is_prefix(abs.i2c_log, abs.i2c_env)) return false;
    return abs.clock == abs.spi_log.size() + abs.i2c_log.size();
}

}  // namespace certibus::driver
