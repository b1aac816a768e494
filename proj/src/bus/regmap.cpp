#include "certibus/bus/regmap.hpp"

#include <array>

namespace certibus::bus {

namespace {

constexpr std::array<RegisterInfo, kI2cRegisterCount> kI2cMap{{
    {"I2C_OA", 0, 32, 0},
    {"I2C_SA", 1, 32, 0},
    {"I2C_RX_DATA", 2, 32, 0},
    {"I2C_TX_DATA", 3, 32, 0},
    {"I2C_CON", 4, 32, 0},
    {"I2C_STAT", 5, 32, 0},
    {"I2C_CNT", 6, 32, 0},
    {"I2C_BUF", 7, 32, 0},
    {"I2C_IRQ_EN", 8, 32, 0},
    {"I2C_SYSC", 9, 32, 0},
}};

constexpr std::array<RegisterInfo, kSpiRegisterCount> kSpiMap{{
    {"SpiRx", 0, 32, 0},
    {"SpiTx", 1, 32, 0},
    {"SpiEn", 2, 1, 0},
    {"SpiMs", 3, 1, 0},
    {"Ch0Ctrl", 4, 1, 0},
    {"Ch0Conf", 5, 32, 0},
    {"Ch0Stat", 6, 32, 0},
    {"TxEmpty", 7, 1, 0},
    {"RxFull", 8, 1, 0},
    {"Revision", 9, 32, 0},
    {"SysConfig", 10, 32, 0},
    {"SysStatus", 11, 32, 0},
    {"IrqStatus", 12, 32, 0},
    {"IrqEnable", 13, 32, 0},
    {"WakeupEn", 14, 32, 0},
    {"SystemTest", 15, 32, 0},
    {"ModulCtrl", 16, 32, 0},
    {"XferLevel", 17, 32, 0},
    {"DmaTx", 18, 32, 0},
    {"DmaRx", 19, 32, 0},
    {"Ch0IrqMask", 20, 32, 0},
    {"Ch0Fifo", 21, 32, 0},
    {"Ch0Delay", 22, 32, 0},
    {"ClockDiv", 23, 32, 0},
    {"PinDir", 24, 32, 0},
}};

}  // namespace

std::span<const RegisterInfo> i2c_register_map() { return kI2cMap; }
std::span<const RegisterInfo> spi_register_map() { return kSpiMap; }

bool i2c_has_register(RegAddr addr) { return addr.index < kI2cRegisterCount; }
bool spi_has_register(RegAddr addr) { return addr.index < kSpiRegisterCount; }

std::string format_register_map(std::span<const RegisterInfo> map) {
    std::string out;
    for (const auto& r : map) {
        out += r.name;
        out += '\t';
        out += std::to_string(r.index);
        out += '\t';
        out += std::to_string(r.reset);
        out += '\n';
    }
    return out;
}

}  // namespace certibus::bus
