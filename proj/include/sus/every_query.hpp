// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sus/sls_stream.hpp"
#include "sus/suffix_structures.hpp"
#include "sus/types.hpp"

namespace sus {

/// Result row for one position.
struct SusRecord {
    Index position;
    Interval leftmost;
    /// All tied shortest unique substrings, ascending by start, when requested.
    std::optional<std::vector<Interval>> all_tied;
};

/// Walker instrumentation collected over a full batch pass.
struct WalkStats {
    std::uint64_t merge_count = 0;
    std::uint64_t appended_count = 0;
    std::size_t peak_nodes = 0;
    std::size_t node_capacity = 0;
};

namespace detail {

// One step of the batch driver. Given sls_k and sus_{k-1}, picks sus_k.
// An SUS that is not an LSUS must be sus_{k-1} with S[k] appended, and that
// is only possible when sus_{k-1} ends exactly at k-1.
struct StepChoice {
    Interval sus;
    // sus came from sls_k, or sls_k ties with the extension; other LSUS
    // candidates in the chunk list may tie as well.
    bool lsus_may_tie = false;
    std::optional<Interval> extension;
};

inline StepChoice choose_sus(Index k, const MaybeInterval& sls, const Interval& prev) {
    if (k == 1 || prev.end() > k - 1) {
        // sls_k must exist here; a missing one means a corrupted index.
        if (!sls) throw Error("no LSUS covers position " + std::to_string(k));
        return {*sls, true, std::nullopt};
    }
    const Interval ext{prev.start, prev.length + 1};
    if (!sls) return {ext, false, ext};
    if (sls->length < ext.length) return {*sls, true, ext};
    // On a tie the extension starts no later than sls_k.
    return {ext, sls->length == ext.length, ext};
}

} // namespace detail

/// Streams the leftmost SUS of every position k = 1..n to
/// `sink(Index k, Interval sus)` in O(n) total time.
template <class Sink>
WalkStats for_each_sus(const SuffixContext& ctx, Sink&& sink) {
    SlsWalker walker(ctx);
    Interval prev{};
    for (Index k = 1; k <= ctx.size(); ++k) {
        const MaybeInterval sls = walker.find_sls(k);
        prev = detail::choose_sus(k, sls, prev).sus;
        sink(k, prev);
        if (k == ctx.size()) break;
    }
    return {walker.merge_count(), walker.appended_count(), walker.peak_nodes(), walker.node_capacity()};
}

/// Streams every tied SUS of every position to
/// `sink(Index k, std::span<const Interval> tied)`. `tied` is ascending by
/// start, so tied.front() is the leftmost SUS. The span is only valid for
/// the duration of the call. Reporting costs O(occ) per position on top of
/// the O(n) walk.
template <class Sink>
WalkStats for_each_all_sus(const SuffixContext& ctx, Sink&& sink) {
    SlsWalker walker(ctx);
    Interval prev{};
    std::vector<Interval> tied;
    for (Index k = 1; k <= ctx.size(); ++k) {
        const MaybeInterval sls = walker.find_sls(k);
        const auto choice = detail::choose_sus(k, sls, prev);
        const Index length = choice.sus.length;

        tied.clear();
        tied.push_back(choice.sus);
        if (choice.lsus_may_tie) {
            // The head candidate was consumed by find_sls; report it from the
            // returned value and skip its duplicate in the list.
            if (sls->length == length) tied.push_back(*sls);
            if (choice.extension && choice.extension->length == length && choice.extension->end() == k) {
                tied.push_back(*choice.extension);
            }
            walker.visit_chunks([&](const ChunkNode& node) {
                if (node.cand_length != length) return false;
                if (node.cand_start != sls->start) tied.push_back(node.candidate());
                return true;
            });
            std::sort(tied.begin(), tied.end());
            tied.erase(std::unique(tied.begin(), tied.end()), tied.end());
        }
        sink(k, std::span<const Interval>(tied));
        prev = choice.sus;
        if (k == ctx.size()) break;
    }
    return {walker.merge_count(), walker.appended_count(), walker.peak_nodes(), walker.node_capacity()};
}

/// Leftmost SUS of every position; entry k-1 is sus_k.
std::vector<Interval> sus_every(const SuffixContext& ctx, WalkStats* stats = nullptr);

/// One record per position with `all_tied` populated.
std::vector<SusRecord> all_sus_every(const SuffixContext& ctx, WalkStats* stats = nullptr);

} // namespace sus
