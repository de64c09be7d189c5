// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "sus/suffix_structures.hpp"

namespace sus {

/// Binary index layout, all integers unsigned 64-bit little-endian:
///
///   "SUSIDX01"  8-byte magic
///   n           text length
///   sa[1..n]    1-based suffix starts
///   rank[1..n]  1-based ranks
///   lcp[1..n+1]
///
/// The text itself is not stored.
inline constexpr char kIndexMagic[8] = {'S', 'U', 'S', 'I', 'D', 'X', '0', '1'};

void write_index(std::ostream& out, const SuffixContext& ctx);
void write_index_file(const std::string& path, const SuffixContext& ctx);

/// Reads an index and binds it to `text`. Throws FormatError on a bad
/// magic, truncated or oversized payload, length mismatch with `text`, or
/// arrays that are not consistent permutations.
SuffixContext read_index(std::istream& in, std::string text);
SuffixContext read_index_file(const std::string& path, std::string text);

} // namespace sus
