#pragma once

#include <array>
#include <cstdint>

#include "certibus/driver/machine.hpp"

namespace certibus::driver {

/// The two top-level read paths shipped with the stack: the bounded-poll
/// variant gives up after a fixed poll budget; the unbounded variant keeps
/// polling while data may still arrive.
enum class Variant { Verified, Unverified };

inline constexpr unsigned kDefaultPollBudget = 16;

// Register values written by the driver.
inline constexpr Word kEnableChannel = 1;
inline constexpr Word kCh0ConfSelect = 0x11;  // chip-select + polarity bits

// Transmit command words for the IMU's six data channels.
inline constexpr std::array<Word, 6> kImuChannelCmd = {0x20, 0x21, 0x22, 0x23, 0x24, 0x25};

// Magnetometer on the I2C bus.
inline constexpr Word kMagSlaveAddr = 0x1E;
inline constexpr Word kMagDataReg = 0x03;

/// Enable SPI channel 0: a single write of ENABLE_CHANNEL to CH0CTRL.
void mcspi_enable_channel(Machine& m);

/// Disable SPI channel 0.
void mcspi_disable_channel(Machine& m);

/// Select or deselect channel 0. Selecting configures the channel's
/// chip-select bits, enables the SPI module, and enables the channel;
/// deselecting disables the channel.
void mcspi_select_channel(Machine& m, bool enable);

/// Bring the SPI controller up: master mode, channel 0 selected.
void mcspi_init(Machine& m);

struct TransferResult {
    enum class Status : Word { Ok = 0, TimedOut = 1, Blocked = 2 };

    Status status{Status::Ok};
    Word value{0};

    friend bool operator==(const TransferResult&, const TransferResult&) = default;
};

/// Write tx to the transmit register, then poll RxFull until data arrives.
/// Verified: at most k_poll polls, then TimedOut with the bus left in a
/// defined state. Unverified: no poll budget; reports Blocked only once the
/// event list is exhausted and further polling provably cannot make
/// progress (a real device would leave the driver spinning here).
/// The number of polls taken is stored in the driver scratch slot.
TransferResult spi_transfer(Machine& m, Word tx, Variant variant,
                            unsigned k_poll = kDefaultPollBudget);

// Raw sensor counts are two's-complement 16-bit values packed into words.
Word pack_count(std::int32_t count);
std::int32_t unpack_count(Word w);

struct ImuSample {
    bool stale{false};    // verified path timed out; counts are zero
    bool blocked{false};  // unverified path starved; counts are zero
    std::array<std::int32_t, 3> gyro{};
    std::array<std::int32_t, 3> accel{};

    friend bool operator==(const ImuSample&, const ImuSample&) = default;
};

/// Read one gyro+accel sample over SPI: one transfer per axis, gyro x/y/z
/// then accel x/y/z. Aborts at the first transfer that times out (stale)
/// or blocks.
ImuSample imu_read_sample(Machine& m, Variant variant, unsigned k_poll = kDefaultPollBudget);

/// Address a device on the I2C bus.
void i2c_set_slave(Machine& m, Word slave_addr);

struct MagSample {
    std::array<std::int32_t, 3> field{};

    friend bool operator==(const MagSample&, const MagSample&) = default;
};

/// Read one magnetometer sample over I2C: write the slave address and the
/// data register pointer, then read the three axis values.
MagSample mag_read_sample(Machine& m);

}  // namespace certibus::driver
