// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>

#include "sus/suffix_structures.hpp"
#include "sus/types.hpp"

namespace sus {

/// Length of the longest common prefix between suffix `i` and any other
/// suffix: max(lcp[rank[i]], lcp[rank[i]+1]). Throws PositionError.
Index lsus_length_bound(const SuffixContext& ctx, Index i);

/// Left-bounded shortest unique substring starting at `i`:
/// (i, L_i + 1) when i + L_i <= n, absent otherwise.
MaybeInterval lsus_at(const SuffixContext& ctx, Index i);

namespace detail {

// Unchecked variants for hot loops; `i` must be in [1, n].
inline Index lsus_bound_unchecked(const SuffixContext& ctx, Index i) noexcept {
    const auto lcp = ctx.lcp();
    const Index r = ctx.rank()[i - 1];
    return std::max(lcp[r - 1], lcp[r]);
}

inline bool lsus_exists(const SuffixContext& ctx, Index i, Index bound) noexcept {
    return static_cast<std::uint64_t>(i) + bound <= ctx.size();
}

} // namespace detail

} // namespace sus
