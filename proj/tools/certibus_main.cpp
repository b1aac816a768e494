#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "certibus/bus/regmap.hpp"
#include "certibus/refine/checks.hpp"
#include "certibus/refine/mutants.hpp"
#include "certibus/refine/replay.hpp"
#include "certibus/sim/experiment.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    if (const char* env = std::getenv("CERTIBUS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad CERTIBUS_SEED: ") + env);
        }
    }
    return fallback;
}

int cmd_check(bool mutants, bool layers, std::uint64_t budget, const std::string& out_dir) {
    using namespace certibus;

    driver::Registry registry = driver::build_registry();
    if (layers) {
        std::cout << driver::format_layer_table(registry);
        return kExitOk;
    }
    if (!driver::layer_dag_ok(registry)) {
        std::cerr << "malformed registry: dependency graph violates the layer order\n";
        return kExitUsage;
    }

    fs::create_directories(out_dir);

    if (mutants) {
        bool all_detected = true;
        for (refine::MutantId id : refine::all_mutants()) {
            driver::Registry mutated = refine::build_mutant_registry(id);
            refine::Report report = refine::run_all(mutated, 4000);
            bool detected = false;
            for (const auto& row : report.rows) {
                if (row.status == "FAIL") detected = true;
            }
            std::string detail;
            if (detected && !report.counterexamples.empty()) {
                refine::Counterexample cex = report.counterexamples.front();
                cex.mutant = refine::to_string(id);
                const fs::path path =
                    fs::path(out_dir) / ("mutant_" + refine::to_string(id) + ".json");
                refine::save_counterexample(cex, path.string());
                refine::ReplayResult rr = refine::replay(cex);
                if (!rr.reproduced) {
                    detected = false;
                    detail = " (counterexample did not replay: " + rr.detail + ")";
                } else {
                    detail = " [" + cex.layer + "/" + cex.check + "]";
                }
            }
            std::cout << "MUTANT " << refine::to_string(id)
                      << (detected ? " DETECTED" : " MISSED") << detail << "\n";
            if (!detected) all_detected = false;
        }
        return all_detected ? kExitOk : kExitCheckFailed;
    }

    refine::Report report = refine::run_all(registry, budget);
    const std::string text = refine::format_report(report);
    std::cout << text;
    const fs::path report_path = fs::path(out_dir) / "check_report.tsv";
    write_file(report_path, text);
    if (!report.all_pass()) {
        for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
            const fs::path cex_path =
                fs::path(out_dir) / ("counterexample_" + std::to_string(i) + ".json");
            refine::save_counterexample(report.counterexamples[i], cex_path.string());
        }
        std::cout << "report: " << report_path.string() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_run(certibus::sim::SimConfig cfg, const std::string& variant_arg,
            const std::string& out_dir) {
    using namespace certibus;

    std::vector<sim::Variant> variants;
    if (variant_arg == "both") {
        variants = {sim::Variant::Verified, sim::Variant::Unverified};
    } else if (variant_arg == "verified") {
        variants = {sim::Variant::Verified};
    } else if (variant_arg == "unverified") {
        variants = {sim::Variant::Unverified};
    } else {
        std::cerr << "unknown variant: " << variant_arg << "\n";
        return kExitUsage;
    }

    fs::create_directories(out_dir);

    std::string metrics_csv = sim::metrics_csv_header();
    std::string metrics_kv;
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t trial_seed = cfg.seed + trial;
        const sim::FaultSchedule schedule = cfg.schedule == "none"
                                                ? sim::no_fault_schedule()
                                                : sim::make_fault_schedule(trial_seed, cfg.duration);
        for (sim::Variant variant : variants) {
            const std::string vname =
                variant == sim::Variant::Verified ? "verified" : "unverified";
            sim::AttitudeTrace trace = sim::run_experiment(cfg, variant, schedule, trial_seed);
            const std::string label = "trial" + std::to_string(trial) + "_" + vname;
            write_file(fs::path(out_dir) / (label + ".csv"), sim::trace_to_csv(trace));
            sim::Metrics metrics = sim::compute_metrics(trace);
            metrics_csv += sim::metrics_csv_row(label, metrics);
            metrics_kv += "[" + label + "]\n" + sim::metrics_to_kv(metrics);
        }
    }
    write_file(fs::path(out_dir) / "metrics.csv", metrics_csv);
    write_file(fs::path(out_dir) / "metrics.txt", metrics_kv);
    std::cout << "wrote " << out_dir << "\n";
    return kExitOk;
}

int cmd_replay(const std::string& path) {
    using namespace certibus;
    refine::Counterexample cex;
    try {
        cex = refine::load_counterexample(path);
    } catch (const std::exception& e) {
        std::cerr << "cannot load replay file: " << e.what() << "\n";
        return kExitUsage;
    }
    refine::ReplayResult result = refine::replay(cex);
    std::cout << (result.reproduced ? "REPRODUCED" : "NOT REPRODUCED") << ": " << result.detail
              << "\n";
    return result.reproduced ? kExitOk : kExitCheckFailed;
}

int cmd_dump_regmap(const std::string& bus_name) {
    using namespace certibus;
    if (bus_name == "i2c") {
        std::cout << bus::format_register_map(bus::i2c_register_map());
        return kExitOk;
    }
    if (bus_name == "spi") {
        std::cout << bus::format_register_map(bus::spi_register_map());
        return kExitOk;
    }
    std::cerr << "unknown bus: " << bus_name << "\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certibus: layered SPI/I2C driver models, refinement checks, and the "
                 "fault-injection flight experiment"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "run the refinement check suite");
    bool mutants = false, layers = false;
    std::uint64_t budget = certibus::refine::kDefaultBudget;
    std::string check_out = "certibus-out";
    check->add_flag("--mutants", mutants, "run the seeded-mutant suite (expects every mutant to fail)");
    check->add_flag("--layers", layers, "print the layer table and exit");
    check->add_option("--budget", budget, "cap generated states per primitive instance");
    check->add_option("--out", check_out, "output directory for reports and counterexamples");

    // run
    auto* run = app.add_subcommand("run", "run the fault-injection flight experiment");
    unsigned trials = 0;
    double duration = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string variant = "both", config_path, run_out = "certibus-out", maneuver, schedule;
    run->add_option("--trials", trials, "number of trials");
    run->add_option("--duration", duration, "seconds per trial");
    auto* seed_opt = run->add_option("--seed", seed, "base seed (env CERTIBUS_SEED as fallback)");
    run->add_option("--variant", variant, "both|verified|unverified");
    run->add_option("--config", config_path, "key = value config file");
    run->add_option("--out", run_out, "output directory");
    run->add_option("--maneuver", maneuver, "setpoint script: maneuver|hover");
    run->add_option("--schedule", schedule, "fault schedule: default|none");

    // replay
    auto* replay = app.add_subcommand("replay", "re-execute a serialized counterexample");
    std::string replay_path;
    replay->add_option("path", replay_path, "replay file")->required();

    // dump-regmap
    auto* dump = app.add_subcommand("dump-regmap", "print a bus register map");
    std::string bus_name;
    dump->add_option("bus", bus_name, "i2c|spi")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(mutants, layers, budget, check_out);
        if (run->parsed()) {
            certibus::sim::SimConfig cfg;
            if (!config_path.empty()) cfg = certibus::sim::load_config_file(config_path, cfg);
            if (trials != 0) cfg.trials = trials;
            if (duration != 0) cfg.duration = duration;
            seed_given = seed_opt->count() > 0;
            cfg.seed = seed_given ? seed : seed_from_env_or(cfg.seed);
            if (!maneuver.empty()) cfg.maneuver = maneuver;
            if (!schedule.empty()) cfg.schedule = schedule;
            // revalidate overrides
            cfg = certibus::sim::parse_config_text("", cfg);
            return cmd_run(cfg, variant, run_out);
        }
        if (replay->parsed()) return cmd_replay(replay_path);
        if (dump->parsed()) return cmd_dump_regmap(bus_name);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
