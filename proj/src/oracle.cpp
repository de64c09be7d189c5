// SPDX-License-Identifier: Apache-2.0

#include "sus/oracle.hpp"

#include <algorithm>

namespace sus::oracle {
namespace {

void check_position(std::string_view text, Index pos) {
    if (pos < 1 || pos > text.size()) throw PositionError(pos, text.size());
}

} // namespace

bool is_unique_naive(std::string_view text, Index start, Index length) {
    if (length < 1 || start < 1 || static_cast<std::uint64_t>(start) + length - 1 > text.size()) {
        throw PositionError(static_cast<std::uint64_t>(start) + length - 1, text.size());
    }
    const std::string_view needle = text.substr(start - 1, length);
    const std::size_t first = text.find(needle);
    return text.find(needle, first + 1) == std::string_view::npos;
}

MaybeInterval lsus_at_naive(std::string_view text, Index i) {
    check_position(text, i);
    const Index max_length = static_cast<Index>(text.size()) - i + 1;
    for (Index length = 1; length <= max_length; ++length) {
        if (is_unique_naive(text, i, length)) return Interval{i, length};
    }
    return std::nullopt;
}

std::vector<Interval> all_sus_at_naive(std::string_view text, Index k) {
    check_position(text, k);
    const Index n = static_cast<Index>(text.size());
    std::vector<Interval> out;
    for (Index length = 1; length <= n; ++length) {
        const Index lo = k >= length ? k - length + 1 : 1;
        const Index hi = std::min<Index>(k, n - length + 1);
        for (Index start = lo; start <= hi; ++start) {
            if (is_unique_naive(text, start, length)) out.push_back(Interval{start, length});
        }
        if (!out.empty()) return out;
    }
    return out; // unreachable: the whole text is unique
}

MaybeInterval sls_at_naive(std::string_view text, Index k) {
    check_position(text, k);
    MaybeInterval best;
    for (Index i = 1; i <= k; ++i) {
        const auto lsus = lsus_at_naive(text, i);
        if (lsus && lsus->covers(k) && (!best || lsus->length < best->length)) best = lsus;
    }
    return best;
}

} // namespace sus::oracle
