// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sus/suffix_structures.hpp"
#include "sus/types.hpp"

namespace sus {

/// Leftmost shortest unique substring covering position `k`, in O(k) time.
///
/// Scans i = 1..k, taking lsus_i or its extension up to k, and keeps the
/// shortest; earlier i wins ties. Stops at the first absent lsus_i since no
/// later one can exist. Throws PositionError.
Interval sus_at(const SuffixContext& ctx, Index k);

/// Every shortest unique substring covering `k`, ascending by start.
/// The first element equals sus_at(ctx, k).
std::vector<Interval> all_sus_at(const SuffixContext& ctx, Index k);

} // namespace sus
