// SPDX-License-Identifier: Apache-2.0

#include "sus/every_query.hpp"

namespace sus {

std::vector<Interval> sus_every(const SuffixContext& ctx, WalkStats* stats) {
    std::vector<Interval> out;
    out.reserve(ctx.size());
    const auto s = for_each_sus(ctx, [&](Index, const Interval& iv) { out.push_back(iv); });
    if (stats) *stats = s;
    return out;
}

std::vector<SusRecord> all_sus_every(const SuffixContext& ctx, WalkStats* stats) {
    std::vector<SusRecord> out;
    out.reserve(ctx.size());
    const auto s = for_each_all_sus(ctx, [&](Index k, std::span<const Interval> tied) {
        out.push_back(SusRecord{k, tied.front(), std::vector<Interval>(tied.begin(), tied.end())});
    });
    if (stats) *stats = s;
    return out;
}

} // namespace sus
