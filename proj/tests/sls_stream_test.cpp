// SPDX-License-Identifier: Apache-2.0

#include "sus/sls_stream.hpp"

#include <gtest/gtest.h>

#include <random>

#include "sus/lsus.hpp"
#include "sus/oracle.hpp"
#include "test_support.hpp"

namespace sus {
namespace {

std::vector<MaybeInterval> walk(const SuffixContext& ctx) {
    SlsWalker walker(ctx);
    std::vector<MaybeInterval> out;
    for (Index k = 1; k <= ctx.size(); ++k) out.push_back(walker.find_sls(k));
    return out;
}

TEST(SlsWalker, FreshWalkerIsEmpty) {
    for (const char* text : {"abcbb", "a", "abcabc"}) {
        const auto ctx = build_context(text);
        const auto walker = new_walker(ctx);
        EXPECT_TRUE(walker.empty());
        EXPECT_TRUE(walker.peek_chunks().empty());
        EXPECT_EQ(walker.next_position(), 1u);
        EXPECT_EQ(walker.merge_count(), 0u);
    }
}

TEST(SlsWalker, WalkExamples) {
    using W = std::vector<MaybeInterval>;
    EXPECT_EQ(walk(build_context("abcbb")),
              (W{Interval{1, 1}, Interval{2, 2}, Interval{3, 1}, Interval{4, 2}, Interval{4, 2}}));
    EXPECT_EQ(walk(build_context("abcabc")),
              (W{Interval{1, 4}, Interval{2, 3}, Interval{3, 2}, Interval{3, 2}, std::nullopt, std::nullopt}));
    EXPECT_EQ(walk(build_context("a")), (W{Interval{1, 1}}));
}

TEST(SlsWalker, PeekChunksTracksHandTrace) {
    const auto ctx = build_context("abcbb");
    SlsWalker walker(ctx);
    walker.find_sls(1);
    EXPECT_TRUE(walker.peek_chunks().empty());
    walker.find_sls(2);
    EXPECT_EQ(walker.peek_chunks(), (std::vector<ChunkNode>{{3, 3, 2, 2}}));
    walker.find_sls(3);
    EXPECT_TRUE(walker.peek_chunks().empty());
    walker.find_sls(4);
    EXPECT_EQ(walker.peek_chunks(), (std::vector<ChunkNode>{{5, 5, 4, 2}}));
}

TEST(SlsWalker, RejectsOutOfOrderCalls) {
    const auto ctx = build_context("abcbb");
    SlsWalker walker(ctx);
    EXPECT_THROW(walker.find_sls(2), ProtocolError);
    walker.find_sls(1);
    EXPECT_THROW(walker.find_sls(1), ProtocolError);
    EXPECT_THROW(walker.find_sls(3), ProtocolError);
    for (Index k = 2; k <= 5; ++k) walker.find_sls(k);
    EXPECT_THROW(walker.find_sls(6), ProtocolError);
}

// Checks the list shape after step k against independently computed
// candidates: positions k+1..gamma_k are covered contiguously, each node's
// candidate is a real LSUS covering its chunk and is the shortest-leftmost
// member of lsus_1..lsus_k covering every position of that chunk.
void check_list_after_step(const std::string& text, const SuffixContext& ctx,
                           const std::vector<MaybeInterval>& lsus, Index k,
                           const std::vector<ChunkNode>& chunks) {
    Index gamma = 0;
    for (Index i = 1; i <= k; ++i) {
        if (lsus[i - 1]) gamma = std::max(gamma, lsus[i - 1]->end());
    }
    if (gamma <= k) {
        ASSERT_TRUE(chunks.empty()) << text << " k=" << k;
        return;
    }
    ASSERT_FALSE(chunks.empty()) << text << " k=" << k;
    ASSERT_EQ(chunks.front().chunk_start, k + 1);
    ASSERT_EQ(chunks.back().chunk_end, gamma);
    for (std::size_t j = 0; j < chunks.size(); ++j) {
        const auto& node = chunks[j];
        ASSERT_LE(node.chunk_start, node.chunk_end);
        ASSERT_LE(node.cand_start, node.chunk_start);
        ASSERT_GE(node.candidate().end(), node.chunk_end);
        ASSERT_EQ(lsus_at(ctx, node.cand_start), node.candidate());
        if (j > 0) {
            ASSERT_EQ(chunks[j - 1].chunk_end + 1, node.chunk_start);
            ASSERT_LE(chunks[j - 1].cand_length, node.cand_length);
        }
        for (Index pos = node.chunk_start; pos <= node.chunk_end; ++pos) {
            MaybeInterval best;
            for (Index i = 1; i <= k; ++i) {
                const auto& c = lsus[i - 1];
                if (c && c->covers(pos) && (!best || c->length < best->length)) best = c;
            }
            ASSERT_EQ(best, node.candidate()) << text << " k=" << k << " pos=" << pos;
        }
    }
}

TEST(SlsWalker, MatchesOracleAndKeepsListShape) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int sigma = ::sus::testing::kAlphabetSizes[trial % 4];
        const auto text = ::sus::testing::random_text(rng, 1 + rng() % 200, sigma);
        const auto ctx = build_context(text);
        std::vector<MaybeInterval> lsus;
        for (Index i = 1; i <= ctx.size(); ++i) lsus.push_back(oracle::lsus_at_naive(text, i));

        SlsWalker walker(ctx);
        for (Index k = 1; k <= ctx.size(); ++k) {
            const auto sls = walker.find_sls(k);
            ASSERT_EQ(sls, oracle::sls_at_naive(text, k)) << text << " k=" << k;
            ASSERT_NO_FATAL_FAILURE(check_list_after_step(text, ctx, lsus, k, walker.peek_chunks()));
        }
        EXPECT_LE(walker.merge_count(), ctx.size());
        EXPECT_LE(walker.appended_count(), ctx.size());
        EXPECT_LE(walker.node_capacity(), ctx.size());
    }
}

TEST(SlsWalker, AbsentExactlyOnUncoveredSuffix) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const auto text = ::sus::testing::random_text(rng, 1 + rng() % 300, 1 + trial % 4);
        const auto ctx = build_context(text);
        Index gamma = 0;
        for (Index i = 1; i <= ctx.size(); ++i) {
            if (const auto l = lsus_at(ctx, i)) gamma = std::max(gamma, l->end());
        }
        const auto sls = walk(ctx);
        for (Index k = 1; k <= ctx.size(); ++k) ASSERT_EQ(sls[k - 1].has_value(), k <= gamma) << text;
    }
}

TEST(SlsWalker, CountersStayLinearOnLargeTexts) {
    std::mt19937_64 rng(41);
    for (int sigma : {1, 2, 4, 26}) {
        const auto text = ::sus::testing::random_text(rng, 200000, sigma);
        const auto ctx = build_context(text);
        SlsWalker walker(ctx);
        for (Index k = 1; k <= ctx.size(); ++k) walker.find_sls(k);
        EXPECT_LE(walker.merge_count(), ctx.size());
        EXPECT_LE(walker.appended_count(), ctx.size());
        EXPECT_LE(walker.peak_nodes(), ctx.size());
        EXPECT_LE(walker.node_capacity(), ctx.size());
    }
}

} // namespace
} // namespace sus
