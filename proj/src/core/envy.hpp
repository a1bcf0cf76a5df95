#pragma once

#include "model.hpp"

#include <optional>
#include <vector>

namespace efx {

struct EnvyReport {
  bool envies = false;
  bool strongly_envies = false;
  std::optional<int> witness_good;  // smallest-index good whose removal keeps envy
};

// Strong envy from a bundle `own` toward a disjoint bundle `other` under v:
// some good of `other` can be removed and the remainder is still worth more
// than `own`.
EnvyReport strong_envy(const Valuation& v, GoodMask own, GoodMask other);

// S is EFX-feasible w.r.t. a disjoint bundle T: v(T \ h) < v(S) for all
// h in T. Vacuously true for empty T.
bool is_efx_feasible(const Valuation& v, GoodMask s, GoodMask t);

// Indices i such that bundles[i] is EFX-feasible w.r.t. every other bundle
// under v. Ascending order.
std::vector<int> feasible_set(const std::vector<GoodMask>& bundles, const Valuation& v);

struct StrongEnvyWitness {
  int agent = -1;
  int bundle = -1;
  int good = -1;
};

// No agent strictly prefers another bundle minus one good to their own.
// The strict comparison tolerates empty bundles.
bool is_efx(const Instance& inst, const Allocation& x);
std::optional<StrongEnvyWitness> find_strong_envy(const Instance& inst, const Allocation& x);

// Smallest (by single-removal) subset S of `envied` with v(own) < v(S) and
// v(own) >= v(S \ h) for every h in S. Deterministic: goods are examined
// cheapest-first (descending remainder v(envied \ g), ties by index).
// Requires v(own) < v(envied) and a monotone v.
GoodMask minimally_envied_subset(const Valuation& v, GoodMask own, GoodMask envied);

// argmax_{g in t} v(t \ g), ties broken by smallest index. For additive
// valuations this is the least-valued good of t.
int best_removal_good(const Valuation& v, GoodMask t);

}  // namespace efx
