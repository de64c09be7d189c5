// SPDX-License-Identifier: Apache-2.0

#include "sus/lsus.hpp"

namespace sus {

Index lsus_length_bound(const SuffixContext& ctx, Index i) {
    if (i < 1 || i > ctx.size()) throw PositionError(i, ctx.size());
    return detail::lsus_bound_unchecked(ctx, i);
}

MaybeInterval lsus_at(const SuffixContext& ctx, Index i) {
    const Index bound = lsus_length_bound(ctx, i);
    if (!detail::lsus_exists(ctx, i, bound)) return std::nullopt;
    return Interval{i, bound + 1};
}

} // namespace sus
