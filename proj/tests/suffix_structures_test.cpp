// SPDX-License-Identifier: Apache-2.0

#include "sus/suffix_structures.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace sus {
namespace {

using ::sus::testing::naive_lcp;
using ::sus::testing::naive_suffix_array;
using V = IndexArray;

TEST(SuffixArray, SmallExamples) {
    EXPECT_EQ(build_suffix_array("abcbb"), (V{1, 5, 4, 2, 3}));
    EXPECT_EQ(build_suffix_array("aaaa"), (V{4, 3, 2, 1}));
    EXPECT_EQ(build_suffix_array("a"), (V{1}));
    EXPECT_EQ(build_suffix_array("abcabc"), naive_suffix_array("abcabc"));
    EXPECT_EQ(build_suffix_array("abcabc"), (V{4, 1, 5, 2, 6, 3}));
}

TEST(SuffixArray, MississippiMatchesTextbookTable) {
    EXPECT_EQ(build_suffix_array("mississippi"), (V{11, 8, 5, 2, 1, 10, 9, 7, 4, 6, 3}));
}

TEST(SuffixArray, EmptyTextIsRejected) {
    EXPECT_THROW(build_suffix_array(""), EmptyTextError);
    EXPECT_THROW(SuffixContext::build(""), EmptyTextError);
}

TEST(SuffixArray, ZeroBytesAndHighBytesSortUnsigned) {
    const std::string text("\x00\xff\x00\x00\x80\xff", 6);
    EXPECT_EQ(build_suffix_array(text), naive_suffix_array(text));
    const std::string zeros(40, '\0');
    EXPECT_EQ(build_suffix_array(zeros), naive_suffix_array(zeros));
}

TEST(SuffixArray, MatchesNaiveSortOnRandomTexts) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int sigma = ::sus::testing::kAlphabetSizes[trial % 4];
        const std::size_t n = 1 + rng() % 500;
        const auto text = ::sus::testing::random_text(rng, n, sigma);
        ASSERT_EQ(build_suffix_array(text), naive_suffix_array(text)) << text;
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto text = ::sus::testing::random_bytes(rng, 1 + rng() % 2000);
        ASSERT_EQ(build_suffix_array(text), naive_suffix_array(text));
    }
}

TEST(SuffixArray, RepetitiveInputsExerciseRecursion) {
    for (std::size_t n : {17u, 100u, 987u, 5000u}) {
        const auto fib = ::sus::testing::fibonacci_word(n);
        EXPECT_EQ(build_suffix_array(fib), naive_suffix_array(fib)) << n;
    }
    std::string periodic;
    for (int i = 0; i < 700; ++i) periodic += "abcab";
    EXPECT_EQ(build_suffix_array(periodic), naive_suffix_array(periodic));
}

TEST(RankArray, InvertsSuffixArray) {
    EXPECT_EQ(build_rank_array(V{1, 5, 4, 2, 3}), (V{1, 4, 5, 3, 2}));
    EXPECT_EQ(build_rank_array(V{1}), (V{1}));
    EXPECT_EQ(build_rank_array(V{4, 3, 2, 1}), (V{4, 3, 2, 1}));
}

TEST(LcpArray, SmallExamples) {
    auto lcp_of = [](std::string_view text) {
        const auto sa = build_suffix_array(text);
        return build_lcp_array(text, sa, build_rank_array(sa));
    };
    EXPECT_EQ(lcp_of("abcbb"), (V{0, 0, 1, 1, 0, 0}));
    EXPECT_EQ(lcp_of("aaaa"), (V{0, 1, 2, 3, 0}));
    EXPECT_EQ(lcp_of("a"), (V{0, 0}));
    EXPECT_EQ(lcp_of("mississippi"), (V{0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3, 0}));
}

TEST(SuffixContext, BuildExamples) {
    const auto ctx = build_context("abcbb");
    EXPECT_EQ(V(ctx.sa().begin(), ctx.sa().end()), (V{1, 5, 4, 2, 3}));
    EXPECT_EQ(V(ctx.rank().begin(), ctx.rank().end()), (V{1, 4, 5, 3, 2}));
    EXPECT_EQ(V(ctx.lcp().begin(), ctx.lcp().end()), (V{0, 0, 1, 1, 0, 0}));

    const auto one = build_context("a");
    EXPECT_EQ(V(one.sa().begin(), one.sa().end()), (V{1}));
    EXPECT_EQ(V(one.lcp().begin(), one.lcp().end()), (V{0, 0}));

    const auto abc = build_context("abcabc");
    EXPECT_EQ(V(abc.sa().begin(), abc.sa().end()), (V{4, 1, 5, 2, 6, 3}));
    EXPECT_EQ(V(abc.rank().begin(), abc.rank().end()), (V{2, 4, 6, 1, 3, 5}));
    EXPECT_EQ(V(abc.lcp().begin(), abc.lcp().end()), (V{0, 3, 0, 2, 0, 1, 0}));
    EXPECT_EQ(abc.sa_at(1), 4u);
    EXPECT_EQ(abc.rank_at(4), 1u);
    EXPECT_EQ(abc.lcp_at(2), 3u);
    EXPECT_EQ(abc.char_at(3), 'c');
}

TEST(SuffixContext, InvariantsOnRandomTexts) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int sigma = ::sus::testing::kAlphabetSizes[trial % 4];
        const auto text = ::sus::testing::random_text(rng, 1 + rng() % 500, sigma);
        const auto ctx = build_context(text);
        const Index n = ctx.size();
        for (Index j = 1; j <= n; ++j) ASSERT_EQ(ctx.rank_at(ctx.sa_at(j)), j);
        for (Index i = 1; i <= n; ++i) ASSERT_EQ(ctx.sa_at(ctx.rank_at(i)), i);
        const V sa(ctx.sa().begin(), ctx.sa().end());
        ASSERT_EQ(V(ctx.lcp().begin(), ctx.lcp().end()), naive_lcp(text, sa));
    }
}

TEST(SuffixContext, FromPartsValidates) {
    const auto good = build_context("abcbb");
    const V sa(good.sa().begin(), good.sa().end());
    const V rank(good.rank().begin(), good.rank().end());
    const V lcp(good.lcp().begin(), good.lcp().end());

    EXPECT_NO_THROW(SuffixContext::from_parts("abcbb", sa, rank, lcp));
    EXPECT_THROW(SuffixContext::from_parts("abcb", sa, rank, lcp), FormatError);
    EXPECT_THROW(SuffixContext::from_parts("abcbb", V{1, 1, 4, 2, 3}, rank, lcp), FormatError);
    EXPECT_THROW(SuffixContext::from_parts("abcbb", sa, V{1, 4, 5, 2, 3}, lcp), FormatError);
    EXPECT_THROW(SuffixContext::from_parts("abcbb", sa, rank, V{1, 0, 1, 1, 0, 0}), FormatError);
    EXPECT_THROW(SuffixContext::from_parts("abcbb", sa, rank, V{0, 0, 1, 9, 0, 0}), FormatError);
    EXPECT_THROW(SuffixContext::from_parts("", {}, {}, V{0}), EmptyTextError);
}

} // namespace
} // namespace sus
