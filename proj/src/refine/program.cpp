#include "certibus/refine/program.hpp"

#include <stdexcept>

namespace certibus::refine {

namespace {
namespace sr = bus::spi_reg;
namespace ir = bus::i2c_reg;

const driver::Primitive& resolve(const driver::Registry& reg, const std::string& name,
                                 int max_level) {
    const driver::Primitive* p = driver::find_primitive(reg, name, max_level);
    if (!p) throw std::invalid_argument("program references unknown call: " + name);
    return *p;
}
}  // namespace

HighRun run_program_high(const driver::Registry& reg, int max_level, const TestProgram& p,
                         const AbstractState& start) {
    HighRun run;
    run.abs = start;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const auto& step = p.steps[i];
        const auto& prim = resolve(reg, step.call, max_level);
        auto next = prim.high(run.abs, step.args);
        if (!next) {
            run.defined = false;
            run.undefined_step = i;
            return run;
        }
        run.abs = std::move(next->abs);
        run.rets.push_back(std::move(next->ret));
    }
    return run;
}

ImplRun run_program_impl(const driver::Registry& reg, int max_level, const TestProgram& p,
                         const AbstractState& start) {
    ImplRun run;
    run.machine.abs = start;
    run.machine.mem = driver::shadow_memory(start);
    for (const auto& step : p.steps) {
        const auto& prim = resolve(reg, step.call, max_level);
        run.rets.push_back(prim.impl(run.machine, step.args));
    }
    return run;
}

std::vector<TestProgram> default_programs_for_pair(const driver::LayerSpec& lower,
                                                   const driver::LayerSpec& upper) {
    using Step = TestProgram::Step;
    (void)lower;
    const driver::Word enable = 1;
    const driver::Word disable = 0;

    if (upper.module == "CH0EN") {
        return {
            {"enable-then-observe",
             {Step{"mcspi_enable_channel", {}}, Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"enable-twice",
             {Step{"mcspi_enable_channel", {}}, Step{"mcspi_enable_channel", {}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"disable-then-observe",
             {Step{"mcspi_disable_channel", {}}, Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"enable-disable",
             {Step{"mcspi_enable_channel", {}}, Step{"mcspi_disable_channel", {}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}},
              Step{"spi_read_register", {sr::kTx.index}}}},
            {"write-then-enable",
             {Step{"spi_write_register", {1, sr::kCh0Conf.index}}, Step{"mcspi_enable_channel", {}},
              Step{"spi_read_register", {sr::kCh0Conf.index}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"empty", {}},
        };
    }
    if (upper.module == "CH0SELECT") {
        return {
            {"select-then-observe",
             {Step{"mcspi_select_channel", {enable}}, Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"select-conf-en",
             {Step{"mcspi_select_channel", {enable}}, Step{"spi_read_register", {sr::kCh0Conf.index}},
              Step{"spi_read_register", {sr::kEn.index}}}},
            {"deselect",
             {Step{"mcspi_select_channel", {disable}}, Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"select-deselect",
             {Step{"mcspi_select_channel", {enable}}, Step{"mcspi_select_channel", {disable}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"select-twice",
             {Step{"mcspi_select_channel", {enable}}, Step{"mcspi_select_channel", {enable}},
              Step{"spi_read_register", {sr::kCh0Conf.index}}}},
            {"enable-then-deselect",
             {Step{"mcspi_enable_channel", {}}, Step{"mcspi_select_channel", {disable}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
        };
    }
    if (upper.module == "SPIINIT") {
        return {
            {"init-then-observe",
             {Step{"mcspi_init", {}}, Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"init-mode",
             {Step{"mcspi_init", {}}, Step{"spi_read_register", {sr::kMs.index}},
              Step{"spi_read_register", {sr::kEn.index}}}},
            {"init-conf", {Step{"mcspi_init", {}}, Step{"spi_read_register", {sr::kCh0Conf.index}}}},
            {"init-twice",
             {Step{"mcspi_init", {}}, Step{"mcspi_init", {}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"deselect-then-init",
             {Step{"mcspi_select_channel", {disable}}, Step{"mcspi_init", {}},
              Step{"spi_read_register", {sr::kCh0Ctrl.index}}}},
            {"init-then-write",
             {Step{"mcspi_init", {}}, Step{"spi_write_register", {7, sr::kTx.index}},
              Step{"spi_read_register", {sr::kTx.index}}}},
        };
    }
    if (upper.module == "XFER") {
        return {
            {"transfer-then-observe-tx",
             {Step{"spi_transfer", {5}}, Step{"spi_read_register", {sr::kTx.index}}}},
            {"transfer-zero", {Step{"spi_transfer", {0}}}},
            {"transfer-twice",
             {Step{"spi_transfer", {5}}, Step{"spi_transfer", {6}},
              Step{"spi_read_register", {sr::kRx.index}}}},
            {"init-then-transfer", {Step{"mcspi_init", {}}, Step{"spi_transfer", {9}}}},
            {"transfer-status",
             {Step{"spi_transfer", {0xFFFFFFFFu}}, Step{"spi_read_register", {sr::kRxFull.index}}}},
            {"raise-rxfull-then-transfer",
             {Step{"spi_write_register", {1, sr::kRxFull.index}}, Step{"spi_transfer", {3}},
              Step{"spi_read_register", {sr::kRx.index}}}},
        };
    }
    if (upper.module == "IMUREAD") {
        return {
            {"read-sample", {Step{"imu_read_sample", {}}}},
            {"init-then-read", {Step{"mcspi_init", {}}, Step{"imu_read_sample", {}}}},
            {"read-then-observe",
             {Step{"imu_read_sample", {}}, Step{"spi_read_register", {sr::kRx.index}}}},
            {"transfer-then-read", {Step{"spi_transfer", {1}}, Step{"imu_read_sample", {}}}},
            {"read-twice", {Step{"imu_read_sample", {}}, Step{"imu_read_sample", {}}}},
            {"clear-then-read",
             {Step{"spi_write_register", {0, sr::kRxFull.index}}, Step{"imu_read_sample", {}}}},
        };
    }
    if (upper.module == "I2CADDR") {
        return {
            {"address-device",
             {Step{"i2c_set_slave", {0x1E}}, Step{"i2c_read_register", {ir::kSa.index}}}},
            {"address-zero",
             {Step{"i2c_set_slave", {0}}, Step{"i2c_read_register", {ir::kSa.index}}}},
            {"readdress",
             {Step{"i2c_set_slave", {0x1E}}, Step{"i2c_set_slave", {0x77}},
              Step{"i2c_read_register", {ir::kSa.index}}}},
            {"write-then-address",
             {Step{"i2c_write_register", {3, ir::kCon.index}}, Step{"i2c_set_slave", {5}},
              Step{"i2c_read_register", {ir::kCon.index}}}},
            {"address-max",
             {Step{"i2c_set_slave", {0xFFFFFFFFu}}, Step{"i2c_read_register", {ir::kSa.index}}}},
            {"empty", {}},
        };
    }
    if (upper.module == "MAGREAD") {
        return {
            {"read-field", {Step{"mag_read_sample", {}}}},
            {"readdress-then-read",
             {Step{"i2c_set_slave", {9}}, Step{"mag_read_sample", {}},
              Step{"i2c_read_register", {ir::kSa.index}}}},
            {"read-then-observe",
             {Step{"mag_read_sample", {}}, Step{"i2c_read_register", {ir::kRxData.index}}}},
            {"read-twice", {Step{"mag_read_sample", {}}, Step{"mag_read_sample", {}}}},
            {"write-buffer-then-read",
             {Step{"i2c_write_register", {1, ir::kRxData.index}}, Step{"mag_read_sample", {}}}},
            {"read-then-pointer",
             {Step{"mag_read_sample", {}}, Step{"i2c_read_register", {ir::kTxData.index}}}},
        };
    }
    return {{"empty", {}}};
}

}  // namespace certibus::refine
