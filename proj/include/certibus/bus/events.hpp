#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "certibus/bus/types.hpp"

namespace certibus::bus {

/// External sensor event on the I2C bus: nothing happened, the device
/// acknowledged, or the device delivered a value.
struct I2cEvent {
    enum class Kind { Null, Ack, Recv };

    Kind kind{Kind::Null};
    Word value{0};  // meaningful only for Recv

    static constexpr I2cEvent null() { return {Kind::Null, 0}; }
    static constexpr I2cEvent ack() { return {Kind::Ack, 0}; }
    static constexpr I2cEvent recv(Word v) { return {Kind::Recv, v}; }

    friend constexpr bool operator==(const I2cEvent&, const I2cEvent&) = default;
};

/// External sensor event on the SPI bus. The alphabet mirrors the I2C one
/// with the acknowledgment replaced by a transfer-complete notification;
/// its transition effects are part of this module's published contract.
struct SpiEvent {
    enum class Kind { Null, XferDone, Recv };

    Kind kind{Kind::Null};
    Word value{0};  // meaningful only for Recv

    static constexpr SpiEvent null() { return {Kind::Null, 0}; }
    static constexpr SpiEvent xfer_done() { return {Kind::XferDone, 0}; }
    static constexpr SpiEvent recv(Word v) { return {Kind::Recv, v}; }

    friend constexpr bool operator==(const SpiEvent&, const SpiEvent&) = default;
};

// The pending external events of a run, and the consumed prefix. The log is
// always a prefix of the list; read/write extend the log one event at a time.
using I2cEventList = std::vector<I2cEvent>;
using I2cEventLog = std::vector<I2cEvent>;
using SpiEventList = std::vector<SpiEvent>;
using SpiEventLog = std::vector<SpiEvent>;

template <typename Event>
bool is_prefix(const std::vector<Event>& log, const std::vector<Event>& env) {
    if (log.size() > env.size()) return false;
    for (std::size_t i = 0; i < log.size(); ++i) {
        if (!(log[i] == env[i])) return false;
    }
    return true;
}

/// Pops the next pending event: the first list entry past the consumed
/// prefix, with the log extended by it. An exhausted list yields a null
/// event and leaves the log untouched, modeling a bus that is waiting for
/// further events. Throws EventLogPrefixError if log is not a prefix of env.
template <typename Event>
std::pair<Event, std::vector<Event>> next_event(const std::vector<Event>& env,
                                                const std::vector<Event>& log) {
    if (!is_prefix(log, env)) throw EventLogPrefixError{};
    if (log.size() < env.size()) {
        std::vector<Event> extended = log;
        extended.push_back(env[log.size()]);
        return {env[log.size()], std::move(extended)};
    }
    return {Event{}, log};
}

// Line-oriented text form. I2C: NULL | ACK | RECV <decimal>.
// SPI: NULL | XFERDONE | RECV <decimal>.
std::string format_event(const I2cEvent& e);
std::string format_event(const SpiEvent& e);
I2cEvent parse_i2c_event(std::string_view line);
SpiEvent parse_spi_event(std::string_view line);

std::string format_event_list(const I2cEventList& events);
std::string format_event_list(const SpiEventList& events);
I2cEventList parse_i2c_event_list(std::string_view text);
SpiEventList parse_spi_event_list(std::string_view text);

}  // namespace certibus::bus
