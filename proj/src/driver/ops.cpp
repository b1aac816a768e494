#include "certibus/driver/ops.hpp"

#include <algorithm>

namespace certibus::driver {

namespace {
namespace sr = bus::spi_reg;
namespace ir = bus::i2c_reg;
}  // namespace

void mcspi_enable_channel(Machine& m) { spi_reg_write(m, kEnableChannel, sr::kCh0Ctrl); }

void mcspi_disable_channel(Machine& m) { spi_reg_write(m, 0, sr::kCh0Ctrl); }

void mcspi_select_channel(Machine& m, bool enable) {
    if (enable) {
        spi_reg_write(m, kCh0ConfSelect, sr::kCh0Conf);
        spi_reg_write(m, 1, sr::kEn);
        mcspi_enable_channel(m);
    } else {
        mcspi_disable_channel(m);
    }
}

void mcspi_init(Machine& m) {
    spi_reg_write(m, 0, sr::kMs);  // master mode
    mcspi_select_channel(m, true);
}

TransferResult spi_transfer(Machine& m, Word tx, Variant variant, unsigned k_poll) {
    spi_reg_write(m, tx, sr::kTx);
    unsigned polls = 0;
    for (;;) {
        if (variant == Variant::Verified && polls == k_poll) {
            m.mem.set_cell(kScratchXferPolls, polls);
            return {TransferResult::Status::TimedOut, 0};
        }
        const bool list_was_exhausted = m.abs.spi_log.size() == m.abs.spi_env.size();
        Word full = spi_reg_read(m, sr::kRxFull);
        ++polls;
        if (full != 0) {
            Word value = spi_reg_read(m, sr::kRx);
            spi_reg_write(m, 0, sr::kRxFull);
            m.mem.set_cell(kScratchXferPolls, polls);
            return {TransferResult::Status::Ok, value};
        }
        if (variant == Variant::Unverified && list_was_exhausted) {
            // No pending events and RxFull clear: every further poll is
            // identical. Real hardware would leave this loop spinning.
            m.mem.set_cell(kScratchXferPolls, polls);
            return {TransferResult::Status::Blocked, 0};
        }
    }
}

Word pack_count(std::int32_t count) {
    count = std::clamp<std::int32_t>(count, -32768, 32767);
    return static_cast<Word>(static_cast<std::uint16_t>(static_cast<std::int16_t>(count)));
}

std::int32_t unpack_count(Word w) {
    return static_cast<std::int32_t>(static_cast<std::int16_t>(static_cast<std::uint16_t>(w & 0xFFFFu)));
}

ImuSample imu_read_sample(Machine& m, Variant variant, unsigned k_poll) {
    ImuSample sample;
    for (std::size_t axis = 0; axis < 6; ++axis) {
        TransferResult r = spi_transfer(m, kImuChannelCmd[axis], variant, k_poll);
        if (r.status == TransferResult::Status::TimedOut) {
            return ImuSample{.stale = true};
        }
        if (r.status == TransferResult::Status::Blocked) {
            return ImuSample{.blocked = true};
        }
        std::int32_t count = unpack_count(r.value);
        if (axis < 3) {
            sample.gyro[axis] = count;
        } else {
            sample.accel[axis - 3] = count;
        }
    }
    return sample;
}

void i2c_set_slave(Machine& m, Word slave_addr) { i2c_reg_write(m, slave_addr, ir::kSa); }

MagSample mag_read_sample(Machine& m) {
    i2c_set_slave(m, kMagSlaveAddr);
    i2c_reg_write(m, kMagDataReg, ir::kTxData);
    MagSample sample;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        sample.field[axis] = unpack_count(i2c_reg_read(m, ir::kRxData));
    }
    return sample;
}

}  // namespace certibus::driver
