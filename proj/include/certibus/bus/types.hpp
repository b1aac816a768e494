#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace certibus::bus {

/// Contents of one abstract bus register. Real bus registers are 32-bit,
/// so register values are bounded words rather than unbounded integers.
using Word = std::uint32_t;

/// Index into a bus's abstract register file. Not a physical memory address;
/// validity is defined by the register map of the bus it is used with.
struct RegAddr {
    Word index{0};

    friend constexpr auto operator<=>(const RegAddr&, const RegAddr&) = default;
};

/// Raised when an operation names a register outside the bus's register map.
class UnknownRegisterError : public std::runtime_error {
public:
    UnknownRegisterError(const std::string& bus, Word index)
        : std::runtime_error("unknown " + bus + " register index " + std::to_string(index)) {}
};

/// Raised when an event log is not a prefix of its event list. This cannot
/// happen through the public read/write operations; it indicates harness
/// misuse (a log paired with the wrong list).
class EventLogPrefixError : public std::logic_error {
public:
    EventLogPrefixError() : std::logic_error("event log is not a prefix of the event list") {}
};

/// A CPU I/O command against a bus register file: either a read of a
/// register or a write of a value to a register.
struct CpuOp {
    enum class Kind { Input, Output };

    Kind kind{Kind::Input};
    RegAddr addr{};
    Word value{0};

    static constexpr CpuOp input(RegAddr a) { return CpuOp{Kind::Input, a, 0}; }
    static constexpr CpuOp output(RegAddr a, Word v) { return CpuOp{Kind::Output, a, v}; }

    friend constexpr bool operator==(const CpuOp&, const CpuOp&) = default;
};

}  // namespace certibus::bus
