#pragma once

#include "model.hpp"

#include <vector>

namespace efx {

// Ordered k-partition of a ground set; parts may be empty.
using PartList = std::vector<GoodMask>;

enum class PrStrategy { Brute, Local };

// Leximin++ ordering: compare the sequences of (value, size) pairs sorted
// ascending by value then size, lexicographically. Returns <0 when b is
// leximin++-better than a, 0 on equal keys, >0 when a is better.
// Both partitions must cover the same ground set with the same k.
int leximin_pp_compare(const PartList& a, const PartList& b, const Valuation& v);

// Authoritative PR implementation: enumerates every assignment of the
// ground set's goods to k ordered parts (base-k counting order) and returns
// the leximin++ maximum, first in enumeration order among equals. The
// output is EFX under v and its minimum part value is >= that of `start`.
PartList pr_bruteforce(GoodMask ground, const Valuation& v, int k, const PartList& start,
                       const Caps& caps);

// Fast path: repeatedly let the minimum-value part swap itself for a
// minimally envied subset of a part it strongly envies. Terminates for
// monotone non-degenerate valuations; on hitting the iteration limit it
// falls back to pr_bruteforce.
PartList pr_localsearch(const PartList& start, const Valuation& v, const Caps& caps);

PartList pr_run(const PartList& start, const Valuation& v, PrStrategy strategy, const Caps& caps);

}  // namespace efx
