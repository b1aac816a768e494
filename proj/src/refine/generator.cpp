#include "certibus/refine/generator.hpp"

#include <random>

namespace certibus::refine {

namespace {

using driver::AbstractState;
using driver::RegAddr;
using driver::Word;

std::vector<bus::SpiEvent> spi_symbols(const std::vector<Word>& values) {
    std::vector<bus::SpiEvent> syms{bus::SpiEvent::null(), bus::SpiEvent::xfer_done()};
    for (Word v : values) syms.push_back(bus::SpiEvent::recv(v));
    return syms;
}

std::vector<bus::I2cEvent> i2c_symbols(const std::vector<Word>& values) {
    std::vector<bus::I2cEvent> syms{bus::I2cEvent::null(), bus::I2cEvent::ack()};
    for (Word v : values) syms.push_back(bus::I2cEvent::recv(v));
    return syms;
}

// Enumerate every event list of length 0..max_len over `syms`, visiting each
// with every log position 0..len. Returns false if the visitor stopped.
template <typename Event, typename Fn>
bool for_each_env(const std::vector<Event>& syms, int max_len, Fn&& fn) {
    std::vector<Event> list;
    for (int len = 0; len <= max_len; ++len) {
        std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
        for (;;) {
            list.clear();
            for (std::size_t d : digits) list.push_back(syms[d]);
            for (std::size_t log_len = 0; log_len <= list.size(); ++log_len) {
                if (!fn(list, log_len)) return false;
            }
            // advance the odometer
            std::size_t pos = 0;
            while (pos < digits.size()) {
                if (++digits[pos] < syms.size()) break;
                digits[pos] = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
        }
    }
    return true;
}

void assemble_logs(AbstractState& a, std::size_t spi_log_len, std::size_t i2c_log_len) {
    a.spi_log.assign(a.spi_env.begin(), a.spi_env.begin() + static_cast<std::ptrdiff_t>(spi_log_len));
    a.i2c_log.assign(a.i2c_env.begin(), a.i2c_env.begin() + static_cast<std::ptrdiff_t>(i2c_log_len));
    a.clock = a.spi_log.size() + a.i2c_log.size();
}

}  // namespace

void for_each_state(const StateGenerator& gen,
                    const std::function<bool(const driver::AbstractState&)>& fn) {
    const auto& dom = gen.domain;
    std::uint64_t visited = 0;
    auto emit = [&](const AbstractState& a) {
        if (visited >= gen.budget) return false;
        ++visited;
        return fn(a);
    };

    if (gen.strategy == StateGenerator::Strategy::Random) {
        std::mt19937_64 rng(gen.seed);
        const auto spi_syms = spi_symbols(gen.event_values);
        const auto i2c_syms = i2c_symbols(gen.event_values);
        for (std::uint64_t i = 0; i < gen.count; ++i) {
            AbstractState a;
            for (RegAddr r : dom.spi_flags) a.spi.regs[r.index] = rng() % 2;
            for (RegAddr r : dom.spi_words) {
                a.spi.regs[r.index] = gen.word_samples[rng() % gen.word_samples.size()];
            }
            for (RegAddr r : dom.i2c_words) {
                a.i2c.regs[r.index] = gen.word_samples[rng() % gen.word_samples.size()];
            }
            const std::size_t spi_len = rng() % (static_cast<std::size_t>(dom.spi_env_len) + 1);
            for (std::size_t k = 0; k < spi_len; ++k) {
                a.spi_env.push_back(spi_syms[rng() % spi_syms.size()]);
            }
            const std::size_t i2c_len = rng() % (static_cast<std::size_t>(dom.i2c_env_len) + 1);
            for (std::size_t k = 0; k < i2c_len; ++k) {
                a.i2c_env.push_back(i2c_syms[rng() % i2c_syms.size()]);
            }
            assemble_logs(a, rng() % (a.spi_env.size() + 1), rng() % (a.i2c_env.size() + 1));
            if (!emit(a)) return;
        }
        return;
    }

    // Exhaustive: word fields form the outer odometer, event lists and log
    // positions the middle, and the one-bit fields vary fastest, so that
    // truncated visits (budgets, sampling) still sweep flag combinations
    // and event variety early.
    const auto spi_syms = spi_symbols(gen.event_values);
    const auto i2c_syms = i2c_symbols(gen.event_values);

    const std::size_t flag_combos = std::size_t{1} << dom.spi_flags.size();
    std::vector<std::size_t> word_digits(dom.spi_words.size() + dom.i2c_words.size(), 0);

    for (;;) {
        AbstractState base;
        for (std::size_t i = 0; i < dom.spi_words.size(); ++i) {
            base.spi.regs[dom.spi_words[i].index] = gen.word_samples[word_digits[i]];
        }
        for (std::size_t i = 0; i < dom.i2c_words.size(); ++i) {
            base.i2c.regs[dom.i2c_words[i].index] =
                gen.word_samples[word_digits[dom.spi_words.size() + i]];
        }

        bool keep_going = for_each_env(
            spi_syms, dom.spi_env_len, [&](const bus::SpiEventList& senv, std::size_t slog) {
                return for_each_env(
                    i2c_syms, dom.i2c_env_len,
                    [&](const bus::I2cEventList& ienv, std::size_t ilog) {
                        for (std::size_t flags = 0; flags < flag_combos; ++flags) {
                            AbstractState a = base;
                            for (std::size_t i = 0; i < dom.spi_flags.size(); ++i) {
                                a.spi.regs[dom.spi_flags[i].index] = (flags >> i) & 1;
                            }
                            a.spi_env = senv;
                            a.i2c_env = ienv;
                            assemble_logs(a, slog, ilog);
                            if (!emit(a)) return false;
                        }
                        return true;
                    });
            });
        if (!keep_going) return;

        std::size_t pos = 0;
        while (pos < word_digits.size()) {
            if (++word_digits[pos] < gen.word_samples.size()) break;
            word_digits[pos] = 0;
            ++pos;
        }
        if (pos == word_digits.size()) break;
    }
}

std::vector<driver::AbstractState> sample_states(const StateGenerator& gen, std::uint64_t limit) {
    std::vector<driver::AbstractState> states;
    for_each_state(gen, [&](const driver::AbstractState& a) {
        states.push_back(a);
        return states.size() < limit;
    });
    return states;
}

}  // namespace certibus::refine
