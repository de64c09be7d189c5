// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sus/huge_page_allocator.hpp"
#include "sus/types.hpp"

namespace sus {

using IndexArray = HugeVector<Index>;

/// Suffix array of `text`: 1-based start positions of all suffixes in
/// ascending lexicographic order. Bytes compare unsigned and a proper
/// prefix sorts before its extensions, so byte 0 needs no special care.
/// Built with SA-IS in linear time.
IndexArray build_suffix_array(std::string_view text);

/// Inverse permutation: rank[sa[j]] = j (both 1-based, stored 0-based).
IndexArray build_rank_array(std::span<const Index> sa);

/// Kasai et al. LCP array with n+1 entries. Entry 0 and entry n are zero;
/// entry i (1 <= i < n) is the lcp of the suffixes at sa[i-1] and sa[i]
/// in 0-based storage, i.e. lcp[i+1] in the 1-based definition.
IndexArray build_lcp_array(std::string_view text, std::span<const Index> sa,
                                   std::span<const Index> rank);

/// Immutable bundle of a text and its suffix array, rank array and LCP
/// array. All stored values are 1-based positions/ranks; vector slots are
/// 0-based, so `sa()[j-1]` is sa[j] and `lcp()[i-1]` is lcp[i].
class SuffixContext {
public:
    /// Builds all three arrays. Throws EmptyTextError / TextTooLargeError.
    static SuffixContext build(std::string text);

    /// Adopts precomputed arrays (e.g. from an index file) after checking
    /// sizes, the permutation/inverse invariant and the lcp boundaries.
    /// Throws FormatError on any inconsistency.
    static SuffixContext from_parts(std::string text, IndexArray sa, IndexArray rank, IndexArray lcp);

    [[nodiscard]] Index size() const noexcept { return static_cast<Index>(text_.size()); }
    [[nodiscard]] std::string_view text() const noexcept { return {text_.data(), text_.size()}; }
    [[nodiscard]] std::span<const Index> sa() const noexcept { return sa_; }
    [[nodiscard]] std::span<const Index> rank() const noexcept { return rank_; }
    [[nodiscard]] std::span<const Index> lcp() const noexcept { return lcp_; }

    /// 1-based accessors matching the textbook notation.
    [[nodiscard]] unsigned char char_at(Index pos) const noexcept {
        return static_cast<unsigned char>(text_[pos - 1]);
    }
    [[nodiscard]] Index sa_at(Index j) const noexcept { return sa_[j - 1]; }
    [[nodiscard]] Index rank_at(Index i) const noexcept { return rank_[i - 1]; }
    [[nodiscard]] Index lcp_at(Index i) const noexcept { return lcp_[i - 1]; }

private:
    SuffixContext(HugeVector<char> text, IndexArray sa, IndexArray rank, IndexArray lcp)
        : text_(std::move(text)), sa_(std::move(sa)), rank_(std::move(rank)), lcp_(std::move(lcp)) {}

    HugeVector<char> text_;
    IndexArray sa_;
    IndexArray rank_;
    IndexArray lcp_;
};

inline SuffixContext build_context(std::string text) { return SuffixContext::build(std::move(text)); }

} // namespace sus
