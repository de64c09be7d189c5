// SPDX-License-Identifier: Apache-2.0

#include "sus/sls_stream.hpp"

#include <algorithm>
#include <string>

#include "sus/lsus.hpp"

namespace sus {
namespace {

constexpr Index kPrefetchDistance = 16;

} // namespace

SlsWalker::SlsWalker(const SuffixContext& ctx) : ctx_(&ctx) {}

void SlsWalker::push_node(const ChunkNode& node) {
    if (nodes_.size() == nodes_.capacity()) {
        // Grow geometrically but never past n slots; at most n nodes are
        // ever appended between two drains.
        const std::size_t n = ctx_->size();
        nodes_.reserve(std::min(n, std::max<std::size_t>(16, nodes_.capacity() * 2)));
    }
    nodes_.push_back(node);
    peak_nodes_ = std::max(peak_nodes_, nodes_.size() - head_);
}

MaybeInterval SlsWalker::find_sls(Index k) {
    const Index n = ctx_->size();
    if (k != next_k_ || k > n) {
        throw ProtocolError("find_sls called with position " + std::to_string(k) + ", expected " +
                            std::to_string(next_k_) + " (n = " + std::to_string(n) + ")");
    }

    // The lcp lookup through rank[] is the only random access per step;
    // fetch it a few steps early.
    if (k + kPrefetchDistance <= n) {
        const Index r = ctx_->rank()[k + kPrefetchDistance - 1];
        __builtin_prefetch(ctx_->lcp().data() + r - 1);
    }

    const Index bound = detail::lsus_bound_unchecked(*ctx_, k);
    if (detail::lsus_exists(*ctx_, k, bound)) {
        const Index gamma = k + bound;
        const Index length = bound + 1;

        // Find the suffix of the list whose candidates are strictly longer
        // than lsus_k. Equal lengths stay: the earlier start wins ties.
        std::size_t first_longer = nodes_.size();
        while (first_longer > head_ && nodes_[first_longer - 1].cand_length > length) {
            --first_longer;
        }

        if (first_longer < nodes_.size()) {
            // lsus_k reaches at least as far as the old tail (lsus lengths
            // shrink by at most one per step), so the merged chunk ends at gamma.
            const ChunkNode merged{nodes_[first_longer].chunk_start, gamma, k, length};
            merge_count_ += nodes_.size() - first_longer - 1;
            nodes_.resize(first_longer);
            push_node(merged);
        } else if (empty()) {
            push_node(ChunkNode{k, gamma, k, length});
            ++appended_count_;
        } else if (gamma > nodes_.back().chunk_end) {
            push_node(ChunkNode{nodes_.back().chunk_end + 1, gamma, k, length});
            ++appended_count_;
        }
    }

    MaybeInterval sls;
    if (!empty()) {
        ChunkNode& head = nodes_[head_];
        sls = head.candidate();
        // Drop position k from the head chunk.
        if (head.chunk_end <= k) {
            ++head_;
            if (empty()) {
                nodes_.clear();
                head_ = 0;
            }
        } else {
            head.chunk_start = k + 1;
        }
    }

    ++next_k_;
    return sls;
}

std::vector<ChunkNode> SlsWalker::peek_chunks() const {
    return {nodes_.begin() + static_cast<std::ptrdiff_t>(head_), nodes_.end()};
}

} // namespace sus
