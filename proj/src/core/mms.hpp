#pragma once

#include "model.hpp"

namespace efx {

struct MmsReport {
  // For every S and every pair of 2-partitions (A, B) of S:
  // max(v(B1), v(B2)) >= min(v(A1), v(A2)).
  bool feasible = false;
  // Strict variant over nonempty S (the empty set always compares 0 with 0).
  bool strict_feasible = false;
};

// O(3^m); gated by caps.mms_goods.
MmsReport mms_feasibility(const Valuation& v, const Caps& caps);

// The non-strict reading; paired with non-degeneracy it implies the strict
// one wherever that matters.
bool is_mms_feasible(const Valuation& v, const Caps& caps);

}  // namespace efx
