// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sus {

/// 1-based text position, rank, or length. Texts longer than
/// `kMaxTextLength` are rejected at index construction.
using Index = std::uint32_t;

inline constexpr std::uint64_t kMaxTextLength = 0xFFFFFFFFull;

/// A substring S[start .. start+length-1] in 1-based coordinates.
struct Interval {
    Index start = 1;
    Index length = 1;

    [[nodiscard]] constexpr Index end() const noexcept { return start + length - 1; }
    [[nodiscard]] constexpr bool covers(Index pos) const noexcept {
        return start <= pos && pos <= end();
    }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

/// Absent when no such substring exists (e.g. an LSUS that would run past
/// the end of the text).
using MaybeInterval = std::optional<Interval>;

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '(' << iv.start << ',' << iv.length << ')';
}

// Error hierarchy. Everything the library throws derives from sus::Error.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyTextError : public Error {
public:
    EmptyTextError() : Error("text must contain at least one byte") {}
};

class TextTooLargeError : public Error {
public:
    explicit TextTooLargeError(std::uint64_t n)
        : Error("text of " + std::to_string(n) + " bytes exceeds the 2^32-1 byte limit") {}
};

class PositionError : public Error {
public:
    PositionError(std::uint64_t pos, std::uint64_t n)
        : Error("position " + std::to_string(pos) + " is outside [1, " + std::to_string(n) + "]") {}
};

class ProtocolError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sus
