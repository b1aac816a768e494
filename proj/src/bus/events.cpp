#include "certibus/bus/events.hpp"

#include <charconv>
#include <stdexcept>

namespace certibus::bus {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

Word parse_recv_value(std::string_view line) {
    std::string_view rest = trim(line.substr(4));
    if (rest.empty()) throw std::invalid_argument("RECV event missing value");
    Word value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
        throw std::invalid_argument("bad RECV value: " + std::string(rest));
    }
    return value;
}

template <typename Event, Event (*ParseOne)(std::string_view)>
std::vector<Event> parse_lines(std::string_view text) {
    std::vector<Event> events;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = trim(nl == std::string_view::npos ? text : text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty()) continue;
        events.push_back(ParseOne(line));
    }
    return events;
}

}  // namespace

std::string format_event(const I2cEvent& e) {
    switch (e.kind) {
        case I2cEvent::Kind::Null: return "NULL";
        case I2cEvent::Kind::Ack: return "ACK";
        case I2cEvent::Kind::Recv: return "RECV " + std::to_string(e.value);
    }
    throw std::logic_error("corrupt I2cEvent");
}

std::string format_event(const SpiEvent& e) {
    switch (e.kind) {
        case SpiEvent::Kind::Null: return "NULL";
        case SpiEvent::Kind::XferDone: return "XFERDONE";
        case SpiEvent::Kind::Recv: return "RECV " + std::to_string(e.value);
    }
    throw std::logic_error("corrupt SpiEvent");
}

I2cEvent parse_i2c_event(std::string_view line) {
    line = trim(line);
    if (line == "NULL") return I2cEvent::null();
    if (line == "ACK") return I2cEvent::ack();
    if (line.substr(0, 4) == "RECV") return I2cEvent::recv(parse_recv_value(line));
    throw std::invalid_argument("bad I2C event: " + std::string(line));
}

SpiEvent parse_spi_event(std::string_view line) {
    line = trim(line);
    if (line == "NULL") return SpiEvent::null();
    if (line == "XFERDONE") return SpiEvent::xfer_done();
    if (line.substr(0, 4) == "RECV") return SpiEvent::recv(parse_recv_value(line));
    throw std::invalid_argument("bad SPI event: " + std::string(line));
}

std::string format_event_list(const I2cEventList& events) {
    std::string out;
    for (const auto& e : events) {
        out += format_event(e);
        out += '\n';
    }
    return out;
}

std::string format_event_list(const SpiEventList& events) {
    std::string out;
    for (const auto& e : events) {
        out += format_event(e);
        out += '\n';
    }
    return out;
}

I2cEventList parse_i2c_event_list(std::string_view text) {
    return parse_lines<I2cEvent, parse_i2c_event>(text);
}

SpiEventList parse_spi_event_list(std::string_view text) {
    return parse_lines<SpiEvent, parse_spi_event>(text);
}

}  // namespace certibus::bus
