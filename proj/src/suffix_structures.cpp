// SPDX-License-Identifier: Apache-2.0

#include "sus/suffix_structures.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace sus {
namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

// Below this size a comparison sort is faster than setting up buckets.
constexpr std::size_t kNaiveThreshold = 16;

// Look-ahead for software prefetching in the scans below. Each scan reads an
// index sequentially and then touches a random location derived from it;
// prefetching that location this many iterations early hides the latency.
constexpr std::size_t kPrefetchDistance = 32;

template <class T>
inline void prefetch_read(const T* p) noexcept {
    __builtin_prefetch(p, 0, 3);
}

template <class T>
inline void prefetch_write(T* p) noexcept {
    __builtin_prefetch(p, 1, 3);
}

template <class Symbol>
IndexArray sort_suffixes_naive(std::span<const Symbol> s) {
    IndexArray sa(s.size());
    std::iota(sa.begin(), sa.end(), Index{0});
    std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
        return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
    });
    return sa;
}

// One bit per position; small enough to stay cache resident for the random
// type lookups of the induce passes.
class BitVector {
public:
    explicit BitVector(std::size_t n) : words_((n + 63) / 64, 0) {}
    [[nodiscard]] bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

private:
    HugeVector<std::uint64_t> words_;
};

// SA-IS (Nong, Zhang & Chan) over symbols in [0, upper]. Returns 0-based
// suffix starts. The end of the string acts as a virtual sentinel smaller
// than every symbol, which yields shorter-is-smaller ordering.
template <class Symbol>
IndexArray sais(std::span<const Symbol> s, Index upper) {
    const std::size_t n = s.size();
    if (n == 0) return {};
    if (n < kNaiveThreshold) return sort_suffixes_naive(s);

    // Set bit = S-type. The last suffix is L-type against the sentinel.
    BitVector stype(n);
    for (std::size_t i = n - 1, next_s = 0; i-- > 0;) {
        const bool is_s = (s[i] == s[i + 1]) ? next_s : (s[i] < s[i + 1]);
        if (is_s) stype.set(i);
        next_s = is_s;
    }
    auto is_lms = [&](std::size_t i) { return i > 0 && stype.get(i) && !stype.get(i - 1); };

    // Bucket boundaries: sum_l[c] is where L-suffixes starting with c begin,
    // sum_s[c] is where S-suffixes starting with c begin.
    std::vector<Index> sum_l(static_cast<std::size_t>(upper) + 2, 0);
    std::vector<Index> sum_s(static_cast<std::size_t>(upper) + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!stype.get(i)) {
            ++sum_s[s[i]];
        } else {
            ++sum_l[static_cast<std::size_t>(s[i]) + 1];
        }
    }
    for (std::size_t c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper) sum_l[c + 1] += sum_s[c];
    }

    IndexArray sa(n);
    std::vector<Index> buf(static_cast<std::size_t>(upper) + 2);
    auto induce = [&](std::span<const Index> lms) {
        std::fill(sa.begin(), sa.end(), kNone);
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for (std::size_t i = 0; i < lms.size(); ++i) {
            if (i + kPrefetchDistance < lms.size()) prefetch_read(&s[lms[i + kPrefetchDistance]]);
            const Index d = lms[i];
            sa[buf[s[d]]++] = d;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = static_cast<Index>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i + kPrefetchDistance < n) {
                const Index ahead = sa[i + kPrefetchDistance];
                if (ahead != kNone && ahead >= 1) prefetch_read(&s[ahead - 1]);
            }
            const Index v = sa[i];
            if (v != kNone && v >= 1 && !stype.get(v - 1)) {
                sa[buf[s[v - 1]]++] = v - 1;
            }
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for (std::size_t i = n; i-- > 0;) {
            if (i >= kPrefetchDistance) {
                const Index ahead = sa[i - kPrefetchDistance];
                if (ahead != kNone && ahead >= 1) prefetch_read(&s[ahead - 1]);
            }
            const Index v = sa[i];
            if (v != kNone && v >= 1 && stype.get(v - 1)) {
                sa[--buf[static_cast<std::size_t>(s[v - 1]) + 1]] = v - 1;
            }
        }
    };

    // LMS positions in text order.
    IndexArray lms;
    for (std::size_t i = 1; i < n; ++i) {
        if (is_lms(i)) lms.push_back(static_cast<Index>(i));
    }
    const std::size_t m = lms.size();

    induce(lms);
    if (m == 0) return sa;

    // Compact the LMS suffixes, now sorted by their LMS substrings, into
    // sa[0, m). LMS positions are never adjacent, so sa[m + p/2] gives each
    // one a private slot in the rest of the array.
    std::size_t filled = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_lms(sa[i])) sa[filled++] = sa[i];
    }
    std::fill(sa.begin() + static_cast<std::ptrdiff_t>(m), sa.end(), kNone);
    const Index last_lms = lms.back();
    for (std::size_t t = 0; t + 1 < m; ++t) sa[m + lms[t] / 2] = lms[t + 1] - lms[t];
    sa[m + last_lms / 2] = static_cast<Index>(n - last_lms);

    // Name LMS substrings (both ends inclusive); equal substrings share a
    // name. The one reaching the sentinel is always distinct.
    Index name = 0;
    Index prev = kNone;
    Index prev_len = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i + kPrefetchDistance < m) {
            const Index ahead = sa[i + kPrefetchDistance];
            prefetch_read(&sa[m + ahead / 2]);
            prefetch_read(&s[ahead]);
        }
        const Index p = sa[i];
        const Index len = sa[m + p / 2];
        bool same = prev != kNone && len == prev_len && p != last_lms && prev != last_lms;
        for (Index d = 0; same && d <= len; ++d) same = s[p + d] == s[prev + d];
        if (i > 0 && !same) ++name;
        sa[m + p / 2] = name;
        prev = p;
        prev_len = len;
    }

    IndexArray reduced(m);
    for (std::size_t t = 0; t < m; ++t) reduced[t] = sa[m + lms[t] / 2];

    IndexArray order = sais<Index>(reduced, name);
    reduced = {};
    for (auto& r : order) r = lms[r];
    induce(order);
    return sa;
}

} // namespace

IndexArray build_suffix_array(std::string_view text) {
    if (text.empty()) throw EmptyTextError();
    if (text.size() > kMaxTextLength) throw TextTooLargeError(text.size());

    const std::span<const unsigned char> bytes(reinterpret_cast<const unsigned char*>(text.data()),
                                               text.size());
    auto sa = sais<unsigned char>(bytes, 255);
    for (Index& v : sa) ++v;
    return sa;
}

IndexArray build_rank_array(std::span<const Index> sa) {
    const std::size_t n = sa.size();
    IndexArray rank(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j + kPrefetchDistance < n) prefetch_write(&rank[sa[j + kPrefetchDistance] - 1]);
        rank[sa[j] - 1] = static_cast<Index>(j + 1);
    }
    return rank;
}

IndexArray build_lcp_array(std::string_view text, std::span<const Index> sa,
                           std::span<const Index> rank) {
    const std::size_t n = text.size();
    // Kasai's bound in the permuted (text-order) form: the lcp of suffix i
    // with its sorted predecessor drops by at most one from suffix i to i+1.
    // plcp[i] starts out as the predecessor of suffix i (kNone for the
    // smallest suffix) and is overwritten in place with the lcp value.
    IndexArray plcp(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (r + kPrefetchDistance < n) prefetch_write(&plcp[sa[r + kPrefetchDistance] - 1]);
        plcp[sa[r] - 1] = r == 0 ? kNone : sa[r - 1] - 1;
    }
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i + kPrefetchDistance < n) {
            const Index ahead = plcp[i + kPrefetchDistance];
            if (ahead != kNone) prefetch_read(text.data() + ahead);
        }
        const Index j = plcp[i];
        if (j == kNone) {
            h = 0;
            plcp[i] = 0;
            continue;
        }
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        plcp[i] = static_cast<Index>(h);
        if (h > 0) --h;
    }
    (void)rank;

    IndexArray lcp(n + 1, 0);
    for (std::size_t r = 1; r < n; ++r) {
        if (r + kPrefetchDistance < n) prefetch_read(&plcp[sa[r + kPrefetchDistance] - 1]);
        lcp[r] = plcp[sa[r] - 1];
    }
    return lcp;
}

SuffixContext SuffixContext::build(std::string text) {
    HugeVector<char> owned(text.begin(), text.end());
    text = {};
    const std::string_view view(owned.data(), owned.size());
    auto sa = build_suffix_array(view);
    auto rank = build_rank_array(sa);
    auto lcp = build_lcp_array(view, sa, rank);
    return SuffixContext(std::move(owned), std::move(sa), std::move(rank), std::move(lcp));
}

SuffixContext SuffixContext::from_parts(std::string text, IndexArray sa, IndexArray rank, IndexArray lcp) {
    const std::size_t n = text.size();
    if (n == 0) throw EmptyTextError();
    if (n > kMaxTextLength) throw TextTooLargeError(n);
    if (sa.size() != n || rank.size() != n || lcp.size() != n + 1) {
        throw FormatError("array lengths do not match a text of " + std::to_string(n) + " bytes");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Index p = sa[j];
        if (p < 1 || p > n || rank[p - 1] != j + 1) {
            throw FormatError("suffix array and rank array are not inverse permutations");
        }
    }
    if (lcp.front() != 0 || lcp.back() != 0) {
        throw FormatError("lcp array must start and end with zero");
    }
    for (std::size_t j = 1; j < n; ++j) {
        const std::size_t longest = n + 1 - std::max(sa[j - 1], sa[j]);
        if (lcp[j] > longest) throw FormatError("lcp value exceeds suffix length");
    }
    return SuffixContext(HugeVector<char>(text.begin(), text.end()), std::move(sa), std::move(rank), std::move(lcp));
}

} // namespace sus
