#include "certibus/refine/checks.hpp"

#include <set>
#include <stdexcept>

namespace certibus::refine {

namespace {

using driver::HighStep;
using driver::LowStep;
using driver::Machine;
using driver::Primitive;
using driver::Ret;
using driver::Word;

bool equal_high(const std::optional<HighStep>& a, const std::optional<HighStep>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->abs == b->abs && a->ret == b->ret;
}

bool equal_low(const std::optional<LowStep>& a, const std::optional<LowStep>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->mem == b->mem && a->abs == b->abs && a->ret == b->ret;
}

Counterexample make_cex(std::string check, const AbstractState& abs, const MemoryState& mem,
                        std::string violated) {
    Counterexample cex;
    cex.check = std::move(check);
    cex.abs = abs;
    cex.mem = mem;
    cex.violated = std::move(violated);
    return cex;
}

std::vector<Args> enumerate_args(const Primitive& p) {
    std::vector<Args> combos{{}};
    for (const auto& domain : p.args) {
        std::vector<Args> next;
        next.reserve(combos.size() * domain.values.size());
        for (const auto& base : combos) {
            for (Word v : domain.values) {
                Args extended = base;
                extended.push_back(v);
                next.push_back(std::move(extended));
            }
        }
        combos = std::move(next);
    }
    return combos;
}

std::uint64_t pow3_geometric(int terms) {
    // 3^0 + 3^1 + ... + 3^(terms-1)
    std::uint64_t total = 0;
    std::uint64_t p = 1;
    for (int i = 0; i < terms; ++i) {
        total += p;
        p *= 3;
    }
    return total;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Undefined: return "UNDEFINED";
    }
    return "?";
}

StateSource source_from_generator(const StateGenerator& gen) {
    return [gen](const std::function<bool(const AbstractState&, const MemoryState&)>& fn) {
        for_each_state(gen, [&](const AbstractState& a) { return fn(a, driver::shadow_memory(a)); });
    };
}

StateSource source_from_pairs(std::vector<StatePair> pairs) {
    return [pairs = std::move(pairs)](
               const std::function<bool(const AbstractState&, const MemoryState&)>& fn) {
        for (const auto& p : pairs) {
            if (!fn(p.abs, p.mem)) return;
        }
    };
}

Verdict check_refinement(const BoundHigh& high, const BoundLow& low,
                         const driver::RelateFn& relate, const StateSource& states) {
    Verdict verdict;
    bool any_defined = false;
    states([&](const AbstractState& a, const MemoryState& m) {
        ++verdict.states_tested;
        if (!relate(a, m)) return true;

        auto h = high(a);
        if (!equal_high(h, high(a))) {
            throw std::logic_error("non-deterministic highspec detected");
        }
        if (!h) return true;
        any_defined = true;

        auto l = low(m, a);
        if (!equal_low(l, low(m, a))) {
            throw std::logic_error("non-deterministic lowspec detected");
        }
        if (!l) {
            verdict.status = Status::Fail;
            verdict.counterexample =
                make_cex("refinement", a, m, "lowspec undefined where highspec steps");
            return false;
        }
        if (!relate(h->abs, l->mem)) {
            verdict.status = Status::Fail;
            verdict.counterexample = make_cex("refinement", a, m, "relation does not hold after step");
            return false;
        }
        if (!(l->abs == h->abs)) {
            verdict.status = Status::Fail;
            verdict.counterexample =
                make_cex("refinement", a, m, "abstract results of lowspec and highspec differ");
            return false;
        }
        if (l->ret != h->ret) {
            verdict.status = Status::Fail;
            verdict.counterexample =
                make_cex("refinement", a, m, "observables of lowspec and highspec differ");
            return false;
        }
        return true;
    });
    if (verdict.status == Status::Pass && !any_defined) verdict.status = Status::Undefined;
    return verdict;
}

Verdict check_impl_against_lowspec(const BoundImpl& impl, const BoundLow& low,
                                   const StateSource& states) {
    Verdict verdict;
    bool any_defined = false;
    states([&](const AbstractState& a, const MemoryState& m) {
        ++verdict.states_tested;
        auto l = low(m, a);
        if (!l) return true;
        any_defined = true;

        Machine machine;
        machine.abs = a;
        machine.mem = m;
        Ret ret;
        try {
            ret = impl(machine);
        } catch (const std::exception& e) {
            verdict.status = Status::Fail;
            verdict.counterexample = make_cex(
                "impl_vs_lowspec", a, m,
                std::string("implementation raised where lowspec is defined: ") + e.what());
            return false;
        }
        if (!(machine.mem == l->mem)) {
            verdict.status = Status::Fail;
            verdict.counterexample =
                make_cex("impl_vs_lowspec", a, m, "memory state diverges from lowspec");
            return false;
        }
        if (!(machine.abs == l->abs)) {
            verdict.status = Status::Fail;
            verdict.counterexample =
                make_cex("impl_vs_lowspec", a, m, "abstract state diverges from lowspec");
            return false;
        }
        if (ret != l->ret) {
            verdict.status = Status::Fail;
            verdict.counterexample =
                make_cex("impl_vs_lowspec", a, m, "return value diverges from lowspec");
            return false;
        }
        return true;
    });
    if (verdict.status == Status::Pass && !any_defined) verdict.status = Status::Undefined;
    return verdict;
}

Verdict check_invariant_preservation(const BoundHigh& high, const driver::InvariantFn& invariant,
                                     const StateSource& states) {
    Verdict verdict;
    bool any_defined = false;
    states([&](const AbstractState& a, const MemoryState& m) {
        ++verdict.states_tested;
        if (!invariant(a)) return true;
        auto h = high(a);
        if (!h) return true;
        any_defined = true;
        if (!invariant(h->abs)) {
            verdict.status = Status::Fail;
            verdict.counterexample = make_cex("invariant", a, m, "invariant not preserved");
            return false;
        }
        return true;
    });
    if (verdict.status == Status::Pass && !any_defined) verdict.status = Status::Undefined;
    return verdict;
}

Verdict check_bounded_poll(const Primitive& transfer, Word tx, unsigned k_poll, int max_len) {
    Verdict verdict;
    const std::array<bus::SpiEvent, 3> symbols{bus::SpiEvent::null(), bus::SpiEvent::xfer_done(),
                                               bus::SpiEvent::recv(1)};
    std::vector<bus::SpiEvent> prefix;
    std::uint64_t covered = 0;
    bool failed = false;

    std::function<void()> dfs = [&]() {
        if (failed) return;
        Machine m;
        m.abs.spi.regs[bus::spi_reg::kCh0Ctrl.index] = 1;
        m.abs.spi_env.assign(prefix.begin(), prefix.end());
        m.mem = driver::shadow_memory(m.abs);

        Ret ret;
        try {
            ret = transfer.impl(m, {tx});
        } catch (const std::exception& e) {
            failed = true;
            verdict.status = Status::Fail;
            auto cex = make_cex("bounded_poll", m.abs, m.mem,
                                std::string("transfer raised: ") + e.what());
            cex.k_poll = k_poll;
            cex.args = {tx};
            verdict.counterexample = std::move(cex);
            return;
        }
        ++verdict.states_tested;

        const bool delivered = !ret.empty() && ret[0] == static_cast<Word>(driver::TransferResult::Status::Ok);
        const std::uint64_t polls = m.spi_bus_ops - 1 - (delivered ? 2 : 0);
        if (polls > k_poll) {
            failed = true;
            verdict.status = Status::Fail;
            AbstractState start;
            start.spi.regs[bus::spi_reg::kCh0Ctrl.index] = 1;
            start.spi_env.assign(prefix.begin(), prefix.end());
            auto cex = make_cex("bounded_poll", start, driver::shadow_memory(start),
                                "poll budget exceeded: " + std::to_string(polls) + " polls > " +
                                    std::to_string(k_poll));
            cex.k_poll = k_poll;
            cex.args = {tx};
            verdict.counterexample = std::move(cex);
            return;
        }

        if (!m.spi_hit_exhausted) {
            // The run never looked past the prefix: every list extending it
            // (up to max_len) behaves identically.
            covered += pow3_geometric(max_len - static_cast<int>(prefix.size()) + 1);
            return;
        }
        covered += 1;  // the list that ends exactly here
        if (static_cast<int>(prefix.size()) < max_len) {
            for (const auto& sym : symbols) {
                prefix.push_back(sym);
                dfs();
                prefix.pop_back();
                if (failed) return;
            }
        }
    };
    dfs();

    if (!failed && covered != pow3_geometric(max_len + 1)) {
        throw std::logic_error("bounded-poll class accounting does not cover the list space");
    }
    return verdict;
}

Verdict check_contextual_refinement(const TestProgram& program, const driver::Registry& reg,
                                    const driver::LayerSpec& upper, const driver::LayerSpec& lower,
                                    const std::vector<AbstractState>& states) {
    Verdict verdict;
    bool any_defined = false;
    for (const AbstractState& a0 : states) {
        ++verdict.states_tested;
        HighRun spec_run = run_program_high(reg, upper.level, program, a0);
        if (!spec_run.defined) continue;
        any_defined = true;

        auto fail = [&](std::string clause) {
            auto cex = make_cex("contextual", a0, driver::shadow_memory(a0), std::move(clause));
            cex.program = program;
            cex.upper_layer = upper.layer;
            cex.lower_layer = lower.layer;
            verdict.status = Status::Fail;
            verdict.counterexample = std::move(cex);
        };

        ImplRun impl_run;
        try {
            impl_run = run_program_impl(reg, upper.level, program, a0);
        } catch (const std::invalid_argument&) {
            throw;  // unknown call: configuration error, not a verdict
        } catch (const std::exception& e) {
            fail(std::string("implementation raised: ") + e.what());
            return verdict;
        }
        for (std::size_t i = 0; i < spec_run.rets.size(); ++i) {
            if (spec_run.rets[i] != impl_run.rets[i]) {
                fail("observable return of step " + std::to_string(i) + " differs");
                return verdict;
            }
        }
        if (!(impl_run.machine.abs == spec_run.abs)) {
            fail("final abstract states differ");
            return verdict;
        }
        if (!upper.relation(spec_run.abs, impl_run.machine.mem)) {
            fail("relation does not hold between final states");
            return verdict;
        }
    }
    if (verdict.status == Status::Pass && !any_defined && !program.steps.empty()) {
        verdict.status = Status::Undefined;
    }
    return verdict;
}

bool Report::all_pass() const {
    for (const auto& row : rows) {
        if (row.status != "PASS") return false;
    }
    return true;
}

std::string format_report(const Report& report) {
    std::string out;
    for (const auto& row : report.rows) {
        out += row.layer;
        out += '\t';
        out += row.check;
        out += '\t';
        out += row.status;
        out += '\t';
        out += std::to_string(row.states_tested);
        out += '\n';
    }
    return out;
}

namespace {

struct Folded {
    Status status{Status::Pass};
    std::uint64_t states{0};
    std::optional<Counterexample> cex;

    void fold(Verdict v) {
        states += v.states_tested;
        if (v.status == Status::Fail && status != Status::Fail) {
            status = Status::Fail;
            cex = std::move(v.counterexample);
        } else if (v.status == Status::Undefined && status == Status::Pass) {
            status = Status::Undefined;
        }
    }
};

void push_row(Report& rep, const std::string& layer, const std::string& check, Folded folded,
              const std::string& primitive, const Args& args) {
    rep.rows.push_back(ReportRow{layer, check, to_string(folded.status), folded.states});
    if (folded.cex) {
        folded.cex->layer = layer;
        if (folded.cex->primitive.empty()) folded.cex->primitive = primitive;
        if (folded.cex->args.empty()) folded.cex->args = args;
        rep.counterexamples.push_back(std::move(*folded.cex));
    }
}

}  // namespace

Report run_all(const driver::Registry& reg, std::uint64_t budget) {
    Report rep;
    std::set<std::string> bad_modules;

    auto blocked = [&](const driver::LayerSpec& l) {
        for (const auto& dep : l.depends) {
            if (bad_modules.count(dep)) return true;
        }
        return false;
    };

    for (const auto& layer : reg.layers) {
        std::vector<std::string> checks = {"refinement", "impl_vs_lowspec", "invariant"};
        if (layer.bounded_poll_check) checks.push_back("bounded_poll");

        if (blocked(layer)) {
            for (const auto& c : checks) {
                rep.rows.push_back(ReportRow{layer.layer, c, "SKIPPED", 0});
            }
            bad_modules.insert(layer.module);
            continue;
        }

        StateGenerator gen = StateGenerator::exhaustive(layer.domain, budget);
        bool layer_failed = false;

        // refinement
        {
            Folded folded;
            std::string cex_prim;
            Args cex_args;
            for (const auto& prim : layer.primitives) {
                for (const Args& args : enumerate_args(prim)) {
                    Verdict v = check_refinement(
                        [&prim, &args](const AbstractState& a) { return prim.high(a, args); },
                        [&prim, &args](const MemoryState& m, const AbstractState& a) {
                            return prim.low(m, a, args);
                        },
                        layer.relation, source_from_generator(gen));
                    if (v.status == Status::Fail && folded.status != Status::Fail) {
                        cex_prim = prim.name;
                        cex_args = args;
                    }
                    folded.fold(std::move(v));
                }
            }
            if (folded.status != Status::Pass) layer_failed = true;
            push_row(rep, layer.layer, "refinement", std::move(folded), cex_prim, cex_args);
        }

        // implementation vs lowspec
        {
            Folded folded;
            std::string cex_prim;
            Args cex_args;
            for (const auto& prim : layer.primitives) {
                for (const Args& args : enumerate_args(prim)) {
                    Verdict v = check_impl_against_lowspec(
                        [&prim, &args](Machine& m) { return prim.impl(m, args); },
                        [&prim, &args](const MemoryState& m, const AbstractState& a) {
                            return prim.low(m, a, args);
                        },
                        source_from_generator(gen));
                    if (v.status == Status::Fail && folded.status != Status::Fail) {
                        cex_prim = prim.name;
                        cex_args = args;
                    }
                    folded.fold(std::move(v));
                }
            }
            if (folded.status != Status::Pass) layer_failed = true;
            push_row(rep, layer.layer, "impl_vs_lowspec", std::move(folded), cex_prim, cex_args);
        }

        // invariant preservation
        {
            Folded folded;
            std::string cex_prim;
            Args cex_args;
            for (const auto& prim : layer.primitives) {
                for (const Args& args : enumerate_args(prim)) {
                    Verdict v = check_invariant_preservation(
                        [&prim, &args](const AbstractState& a) { return prim.high(a, args); },
                        layer.invariant, source_from_generator(gen));
                    if (v.status == Status::Fail && folded.status != Status::Fail) {
                        cex_prim = prim.name;
                        cex_args = args;
                    }
                    folded.fold(std::move(v));
                }
            }
            if (folded.status != Status::Pass) layer_failed = true;
            push_row(rep, layer.layer, "invariant", std::move(folded), cex_prim, cex_args);
        }

        if (layer.bounded_poll_check) {
            Folded folded;
            std::string cex_prim;
            for (const auto& prim : layer.primitives) {
                if (prim.name != "spi_transfer") continue;
                Verdict v = check_bounded_poll(prim, 1, layer.k_poll,
                                               static_cast<int>(layer.k_poll) + 1);
                if (v.status == Status::Fail && folded.status != Status::Fail) {
                    cex_prim = prim.name;
                }
                folded.fold(std::move(v));
            }
            if (folded.status != Status::Pass) layer_failed = true;
            push_row(rep, layer.layer, "bounded_poll", std::move(folded), cex_prim, {});
        }

        if (layer_failed) bad_modules.insert(layer.module);
    }

    // contextual refinement per adjacent pair
    for (const auto& [lower, upper] : driver::adjacent_pairs(reg)) {
        if (bad_modules.count(lower->module) || bad_modules.count(upper->module)) {
            rep.rows.push_back(ReportRow{upper->layer, "contextual", "SKIPPED", 0});
            continue;
        }
        StateGenerator gen = StateGenerator::exhaustive(upper->domain);
        std::vector<AbstractState> states = sample_states(gen, std::min<std::uint64_t>(
                                                                   kContextualStates, budget));
        Folded folded;
        std::string cex_prim;
        for (const TestProgram& program : default_programs_for_pair(*lower, *upper)) {
            Verdict v = check_contextual_refinement(program, reg, *upper, *lower, states);
            if (v.status == Status::Fail && folded.status != Status::Fail) {
                cex_prim = upper->module;
            }
            folded.fold(std::move(v));
        }
        push_row(rep, upper->layer, "contextual", std::move(folded), cex_prim, {});
    }

    return rep;
}

}  // namespace certibus::refine
