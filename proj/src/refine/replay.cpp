#include "certibus/refine/replay.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "certibus/refine/checks.hpp"
#include "certibus/refine/mutants.hpp"

namespace certibus::refine {

namespace {

using nlohmann::json;

json events_to_json(const bus::SpiEventList& events) {
    json arr = json::array();
    for (const auto& e : events) arr.push_back(bus::format_event(e));
    return arr;
}

json events_to_json(const bus::I2cEventList& events) {
    json arr = json::array();
    for (const auto& e : events) arr.push_back(bus::format_event(e));
    return arr;
}

json abstract_to_json(const AbstractState& a) {
    json j;
    j["spi"] = a.spi.regs;
    j["i2c"] = a.i2c.regs;
    j["spi_env"] = events_to_json(a.spi_env);
    j["spi_log"] = events_to_json(a.spi_log);
    j["i2c_env"] = events_to_json(a.i2c_env);
    j["i2c_log"] = events_to_json(a.i2c_log);
    j["clock"] = a.clock;
    return j;
}

AbstractState abstract_from_json(const json& j) {
    AbstractState a;
    a.spi.regs = j.at("spi").get<std::array<driver::Word, bus::kSpiRegisterCount>>();
    a.i2c.regs = j.at("i2c").get<std::array<driver::Word, bus::kI2cRegisterCount>>();
    for (const auto& s : j.at("spi_env")) a.spi_env.push_back(bus::parse_spi_event(s.get<std::string>()));
    for (const auto& s : j.at("spi_log")) a.spi_log.push_back(bus::parse_spi_event(s.get<std::string>()));
    for (const auto& s : j.at("i2c_env")) a.i2c_env.push_back(bus::parse_i2c_event(s.get<std::string>()));
    for (const auto& s : j.at("i2c_log")) a.i2c_log.push_back(bus::parse_i2c_event(s.get<std::string>()));
    a.clock = j.at("clock").get<std::uint64_t>();
    return a;
}

json program_to_json(const TestProgram& p) {
    json steps = json::array();
    for (const auto& s : p.steps) {
        steps.push_back(json{{"call", s.call}, {"args", s.args}});
    }
    return json{{"name", p.name}, {"steps", steps}};
}

TestProgram program_from_json(const json& j) {
    TestProgram p;
    p.name = j.at("name").get<std::string>();
    for (const auto& s : j.at("steps")) {
        p.steps.push_back(TestProgram::Step{s.at("call").get<std::string>(),
                                            s.at("args").get<Args>()});
    }
    return p;
}

}  // namespace

std::string counterexample_to_json(const Counterexample& cex) {
    json j;
    j["check"] = cex.check;
    j["layer"] = cex.layer;
    j["primitive"] = cex.primitive;
    j["args"] = cex.args;
    j["violated"] = cex.violated;
    j["abstract"] = abstract_to_json(cex.abs);
    j["memory"] = cex.mem.cells;
    if (cex.program) j["program"] = program_to_json(*cex.program);
    if (!cex.upper_layer.empty()) j["upper_layer"] = cex.upper_layer;
    if (!cex.lower_layer.empty()) j["lower_layer"] = cex.lower_layer;
    if (!cex.mutant.empty()) j["mutant"] = cex.mutant;
    if (cex.k_poll != 0) j["k_poll"] = cex.k_poll;
    return j.dump(2) + "\n";
}

Counterexample counterexample_from_json(const std::string& text) {
    json j = json::parse(text);
    Counterexample cex;
    cex.check = j.at("check").get<std::string>();
    cex.layer = j.at("layer").get<std::string>();
    cex.primitive = j.at("primitive").get<std::string>();
    cex.args = j.at("args").get<Args>();
    cex.violated = j.at("violated").get<std::string>();
    cex.abs = abstract_from_json(j.at("abstract"));
    cex.mem.cells = j.at("memory").get<std::array<driver::Word, driver::kMemoryCellCount>>();
    if (j.contains("program")) cex.program = program_from_json(j.at("program"));
    if (j.contains("upper_layer")) cex.upper_layer = j.at("upper_layer").get<std::string>();
    if (j.contains("lower_layer")) cex.lower_layer = j.at("lower_layer").get<std::string>();
    if (j.contains("mutant")) cex.mutant = j.at("mutant").get<std::string>();
    if (j.contains("k_poll")) cex.k_poll = j.at("k_poll").get<unsigned>();
    return cex;
}

void save_counterexample(const Counterexample& cex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write replay file: " + path);
    out << counterexample_to_json(cex);
}

Counterexample load_counterexample(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read replay file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return counterexample_from_json(text);
}

ReplayResult replay(const Counterexample& cex, const driver::DriverConfig& cfg) {
    driver::Registry reg = driver::build_registry(cfg);
    if (!cex.mutant.empty()) {
        auto id = mutant_from_string(cex.mutant);
        if (!id) return {false, "unknown mutant in replay file: " + cex.mutant};
        apply_mutant(reg, *id);
    }

    const driver::LayerSpec* layer = driver::find_layer(reg, cex.layer);
    if (!layer) return {false, "unknown layer in replay file: " + cex.layer};

    if (cex.check == "contextual") {
        if (!cex.program) return {false, "contextual counterexample without a program"};
        const driver::LayerSpec* upper = driver::find_layer(reg, cex.upper_layer);
        const driver::LayerSpec* lower = driver::find_layer(reg, cex.lower_layer);
        if (!upper || !lower) return {false, "unknown layer pair in replay file"};
        Verdict v = check_contextual_refinement(*cex.program, reg, *upper, *lower, {cex.abs});
        if (v.status != Status::Fail) return {false, "violation did not reproduce"};
        if (v.counterexample->violated != cex.violated) {
            return {false, "different clause violated: " + v.counterexample->violated};
        }
        return {true, "reproduced: " + cex.violated};
    }

    const driver::Primitive* prim = nullptr;
    for (const auto& p : layer->primitives) {
        if (p.name == cex.primitive) prim = &p;
    }
    if (!prim) return {false, "unknown primitive in replay file: " + cex.primitive};

    Verdict v;
    if (cex.check == "refinement") {
        v = check_refinement(
            [prim, &cex](const AbstractState& a) { return prim->high(a, cex.args); },
            [prim, &cex](const MemoryState& m, const AbstractState& a) {
                return prim->low(m, a, cex.args);
            },
            layer->relation, source_from_pairs({{cex.abs, cex.mem}}));
    } else if (cex.check == "impl_vs_lowspec") {
        v = check_impl_against_lowspec(
            [prim, &cex](driver::Machine& m) { return prim->impl(m, cex.args); },
            [prim, &cex](const MemoryState& m, const AbstractState& a) {
                return prim->low(m, a, cex.args);
            },
            source_from_pairs({{cex.abs, cex.mem}}));
    } else if (cex.check == "invariant") {
        v = check_invariant_preservation(
            [prim, &cex](const AbstractState& a) { return prim->high(a, cex.args); },
            layer->invariant, source_from_pairs({{cex.abs, cex.mem}}));
    } else if (cex.check == "bounded_poll") {
        driver::Machine m;
        m.abs = cex.abs;
        m.mem = driver::shadow_memory(cex.abs);
        driver::Ret ret = prim->impl(m, cex.args);
        const bool delivered =
            !ret.empty() && ret[0] == static_cast<driver::Word>(driver::TransferResult::Status::Ok);
        const std::uint64_t polls = m.spi_bus_ops - 1 - (delivered ? 2 : 0);
        if (polls > cex.k_poll) {
            return {true, "reproduced: " + std::to_string(polls) + " polls > " +
                              std::to_string(cex.k_poll)};
        }
        return {false, "poll budget held on replay"};
    } else {
        return {false, "unknown check kind: " + cex.check};
    }

    if (v.status != Status::Fail) return {false, "violation did not reproduce"};
    if (v.counterexample->violated != cex.violated) {
        return {false, "different clause violated: " + v.counterexample->violated};
    }
    return {true, "reproduced: " + cex.violated};
}

}  // namespace certibus::refine
