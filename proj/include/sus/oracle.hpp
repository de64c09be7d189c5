// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "sus/types.hpp"

// Brute-force reference implementations. They only scan windows of the raw
// text and share no code with the index-based path.
namespace sus::oracle {

/// True iff S[start .. start+length-1] occurs exactly once in `text`.
/// Throws PositionError for an interval outside the text.
bool is_unique_naive(std::string_view text, Index start, Index length);

/// Shortest unique substring starting exactly at `i`, or nullopt.
MaybeInterval lsus_at_naive(std::string_view text, Index i);

/// All minimal-length unique substrings covering `k`, ascending by start.
std::vector<Interval> all_sus_at_naive(std::string_view text, Index k);

/// Shortest existing member of {lsus_1..lsus_k} covering `k`, leftmost on
/// ties; nullopt when none covers k.
MaybeInterval sls_at_naive(std::string_view text, Index k);

} // namespace sus::oracle
