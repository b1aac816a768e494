#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "certibus/bus/types.hpp"

namespace certibus::bus {

/// One row of a bus register map: the published name of the register, its
/// index in the abstract register file, its width in bits, and its value
/// after reset.
struct RegisterInfo {
    std::string_view name;
    Word index;
    unsigned width;
    Word reset;
};

inline constexpr std::size_t kI2cRegisterCount = 10;
inline constexpr std::size_t kSpiRegisterCount = 25;

/// The ten I2C registers. All reset to zero.
std::span<const RegisterInfo> i2c_register_map();

/// The twenty-five SPI registers. All reset to zero (module disabled,
/// master mode, channel 0 disabled).
std::span<const RegisterInfo> spi_register_map();

bool i2c_has_register(RegAddr addr);
bool spi_has_register(RegAddr addr);

/// Map rendered in the line-oriented dump format: NAME<TAB>INDEX<TAB>RESET.
std::string format_register_map(std::span<const RegisterInfo> map);

// I2C register indices.
namespace i2c_reg {
inline constexpr RegAddr kOa{0};
inline constexpr RegAddr kSa{1};
inline constexpr RegAddr kRxData{2};
inline constexpr RegAddr kTxData{3};
inline constexpr RegAddr kCon{4};
inline constexpr RegAddr kStat{5};
inline constexpr RegAddr kCnt{6};
inline constexpr RegAddr kBuf{7};
inline constexpr RegAddr kIrqEn{8};
inline constexpr RegAddr kSysc{9};
}  // namespace i2c_reg

// SPI register indices. SpiEn/SpiMs/Ch0Ctrl/TxEmpty/RxFull are one-bit
// fields; any written word is stored verbatim and flag accessors treat
// nonzero as set.
namespace spi_reg {
inline constexpr RegAddr kRx{0};
inline constexpr RegAddr kTx{1};
inline constexpr RegAddr kEn{2};
inline constexpr RegAddr kMs{3};
inline constexpr RegAddr kCh0Ctrl{4};
inline constexpr RegAddr kCh0Conf{5};
inline constexpr RegAddr kCh0Stat{6};
inline constexpr RegAddr kTxEmpty{7};
inline constexpr RegAddr kRxFull{8};
inline constexpr RegAddr kRevision{9};
inline constexpr RegAddr kSysConfig{10};
inline constexpr RegAddr kSysStatus{11};
inline constexpr RegAddr kIrqStatus{12};
inline constexpr RegAddr kIrqEnable{13};
inline constexpr RegAddr kWakeupEn{14};
inline constexpr RegAddr kSystemTest{15};
inline constexpr RegAddr kModulCtrl{16};
inline constexpr RegAddr kXferLevel{17};
inline constexpr RegAddr kDmaTx{18};
inline constexpr RegAddr kDmaRx{19};
inline constexpr RegAddr kCh0IrqMask{20};
inline constexpr RegAddr kCh0Fifo{21};
inline constexpr RegAddr kCh0Delay{22};
inline constexpr RegAddr kClockDiv{23};
inline constexpr RegAddr kPinDir{24};
}  // namespace spi_reg

}  // namespace certibus::bus
