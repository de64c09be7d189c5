// SPDX-License-Identifier: Apache-2.0

#include "sus/single_query.hpp"

#include <algorithm>

#include "sus/lsus.hpp"

namespace sus {
namespace {

void check_position(const SuffixContext& ctx, Index k) {
    if (k < 1 || k > ctx.size()) throw PositionError(k, ctx.size());
}

// Calls visit(i, covering_length) for each existing lsus_i, i <= k.
template <class Visit>
void for_each_covering_candidate(const SuffixContext& ctx, Index k, Visit&& visit) {
    for (Index i = 1; i <= k; ++i) {
        const Index bound = detail::lsus_bound_unchecked(ctx, i);
        if (!detail::lsus_exists(ctx, i, bound)) break;
        visit(i, std::max<Index>(bound + 1, k - i + 1));
    }
}

} // namespace

Interval sus_at(const SuffixContext& ctx, Index k) {
    check_position(ctx, k);
    Interval best{1, ctx.size()};
    for_each_covering_candidate(ctx, k, [&](Index i, Index length) {
        if (length < best.length) best = Interval{i, length};
    });
    return best;
}

std::vector<Interval> all_sus_at(const SuffixContext& ctx, Index k) {
    const Index length = sus_at(ctx, k).length;
    std::vector<Interval> out;
    for_each_covering_candidate(ctx, k, [&](Index i, Index len) {
        if (len == length) out.push_back(Interval{i, len});
    });
    return out;
}

} // namespace sus
