// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sus/suffix_structures.hpp"
#include "sus/types.hpp"

namespace sus {

/// A run of consecutive positions [chunk_start, chunk_end] that share one
/// candidate: the shortest (leftmost on ties) LSUS seen so far covering them.
struct ChunkNode {
    Index chunk_start;
    Index chunk_end;
    Index cand_start;
    Index cand_length;

    [[nodiscard]] Interval candidate() const noexcept { return {cand_start, cand_length}; }
    friend bool operator==(const ChunkNode&, const ChunkNode&) = default;
};

/// Streams SLS_k, the shortest LSUS covering k (leftmost on ties), for
/// k = 1, 2, ..., n in amortized O(1) per step.
///
/// The walker keeps chunks for positions k+1 .. gamma, where gamma is the
/// right end of the last existing LSUS seen. Chunk candidate lengths never
/// decrease from head to tail, so a new lsus_k only ever replaces a suffix
/// of the list; those nodes are merged into one. Nodes are appended at the
/// tail, merged at the tail and consumed at the head, never split.
///
/// Single owner, strictly sequential. Holds a reference to `ctx`, which
/// must outlive the walker.
class SlsWalker {
public:
    explicit SlsWalker(const SuffixContext& ctx);

    /// Advances the walk to position `k` and returns SLS_k, or nullopt when
    /// no LSUS covers k. `k` must equal next_position(); anything else
    /// throws ProtocolError.
    MaybeInterval find_sls(Index k);

    /// Live chunks, head to tail.
    [[nodiscard]] std::vector<ChunkNode> peek_chunks() const;

    /// Calls f(node) head to tail until f returns false. No allocation.
    template <class F>
    void visit_chunks(F&& f) const {
        for (std::size_t j = head_; j < nodes_.size(); ++j) {
            if (!f(nodes_[j])) return;
        }
    }

    [[nodiscard]] bool empty() const noexcept { return head_ == nodes_.size(); }
    [[nodiscard]] Index next_position() const noexcept { return next_k_; }
    [[nodiscard]] const SuffixContext& context() const noexcept { return *ctx_; }

    /// Nodes absorbed into another node by the merge step.
    [[nodiscard]] std::uint64_t merge_count() const noexcept { return merge_count_; }
    /// Nodes appended at the tail for newly covered positions.
    [[nodiscard]] std::uint64_t appended_count() const noexcept { return appended_count_; }
    /// Largest number of simultaneously live nodes.
    [[nodiscard]] std::size_t peak_nodes() const noexcept { return peak_nodes_; }
    /// Allocated node slots; never exceeds n.
    [[nodiscard]] std::size_t node_capacity() const noexcept { return nodes_.capacity(); }

private:
    void push_node(const ChunkNode& node);

    const SuffixContext* ctx_;
    // Live nodes are nodes_[head_ .. size-1]. Slots before head_ are
    // dead and get dropped whenever the list drains.
    std::vector<ChunkNode> nodes_;
    std::size_t head_ = 0;
    Index next_k_ = 1;
    std::uint64_t merge_count_ = 0;
    std::uint64_t appended_count_ = 0;
    std::size_t peak_nodes_ = 0;
};

inline SlsWalker new_walker(const SuffixContext& ctx) { return SlsWalker(ctx); }

} // namespace sus
