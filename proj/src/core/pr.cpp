#include "pr.hpp"

#include "envy.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace efx {

namespace {

using Key = std::vector<std::pair<Val, int>>;  // (value, size) ascending

Key leximin_key(const PartList& parts, const Valuation& v) {
  Key key;
  key.reserve(parts.size());
  for (GoodMask p : parts) key.emplace_back(v.value(p), bundle_size(p));
  std::sort(key.begin(), key.end());
  return key;
}

GoodMask union_of(const PartList& parts) {
  GoodMask g = 0;
  for (GoodMask p : parts) g |= p;
  return g;
}

void require_partition(const PartList& parts, GoodMask ground, const char* who) {
  GoodMask seen = 0;
  for (GoodMask p : parts) {
    if ((p & seen) != 0) throw PreconditionError(std::string(who) + ": parts overlap");
    seen |= p;
  }
  if (seen != ground)
    throw PreconditionError(std::string(who) + ": parts do not cover the ground set");
}

}  // namespace

int leximin_pp_compare(const PartList& a, const PartList& b, const Valuation& v) {
  if (a.size() != b.size() || union_of(a) != union_of(b))
    throw PreconditionError("leximin_pp_compare: mismatched ground sets");
  const Key ka = leximin_key(a, v);
  const Key kb = leximin_key(b, v);
  if (ka < kb) return -1;
  if (kb < ka) return 1;
  return 0;
}

PartList pr_bruteforce(GoodMask ground, const Valuation& v, int k, const PartList& start,
                       const Caps& caps) {
  if (k < 1) throw PreconditionError("pr_bruteforce: k must be positive");
  if (!v.monotone()) throw PreconditionError("pr_bruteforce: valuation must be monotone");
  if (static_cast<int>(start.size()) != k)
    throw PreconditionError("pr_bruteforce: start partition has the wrong number of parts");
  require_partition(start, ground, "pr_bruteforce");

  const std::vector<int> goods = goods_of(ground);
  const int cnt = static_cast<int>(goods.size());

  std::uint64_t total = 1;
  for (int i = 0; i < cnt; ++i) {
    if (total > caps.pr_assignments / static_cast<std::uint64_t>(k))
      throw CapError("pr_bruteforce: k^|ground| exceeds the configured cap");
    total *= static_cast<std::uint64_t>(k);
  }

  // Odometer over assignment vectors; digit i = part of goods[i], good with
  // the lowest index is the least significant digit.
  std::vector<int> digit(cnt, 0);
  PartList parts(k, 0);
  parts[0] = ground;
  std::vector<Val> vals(k, Val(0));
  vals[0] = v.value(ground);

  const bool additive = v.kind() == Valuation::Kind::Additive;
  auto move_good = [&](int g, int from, int to) {
    parts[from] &= ~good_bit(g);
    parts[to] |= good_bit(g);
    if (additive) {
      vals[from] -= v.good_value(g);
      vals[to] += v.good_value(g);
    } else {
      vals[from] = v.value(parts[from]);
      vals[to] = v.value(parts[to]);
    }
  };

  auto current_key = [&]() {
    Key key;
    key.reserve(k);
    for (int i = 0; i < k; ++i) key.emplace_back(vals[i], bundle_size(parts[i]));
    std::sort(key.begin(), key.end());
    return key;
  };

  PartList best = parts;
  Key best_key = current_key();

  for (std::uint64_t code = 1; code < total; ++code) {
    // increment the odometer, moving goods between parts as digits change
    int pos = 0;
    while (true) {
      const int from = digit[pos];
      const int to = (from + 1 == k) ? 0 : from + 1;
      digit[pos] = to;
      move_good(goods[pos], from, to);
      if (to != 0) break;
      ++pos;
    }
    Key key = current_key();
    if (best_key < key) {
      best_key = std::move(key);
      best = parts;
    }
  }

  return best;
}

PartList pr_localsearch(const PartList& start, const Valuation& v, const Caps& caps) {
  if (start.empty()) throw PreconditionError("pr_localsearch: empty partition");
  if (!v.monotone()) throw PreconditionError("pr_localsearch: valuation must be monotone");
  const GoodMask ground = union_of(start);
  require_partition(start, ground, "pr_localsearch");

  PartList parts = start;
  const int k = static_cast<int>(parts.size());

  for (std::uint64_t iter = 0; iter < caps.pr_iterations; ++iter) {
    int min_idx = 0;
    Val min_val = v.value(parts[0]);
    for (int i = 1; i < k; ++i) {
      const Val vi = v.value(parts[i]);
      if (vi < min_val) {
        min_val = vi;
        min_idx = i;
      }
    }

    // If the minimum part strongly envies nobody, nobody strongly envies
    // anybody and the partition is EFX.
    int target = -1;
    for (int j = 0; j < k; ++j) {
      if (j == min_idx || parts[j] == 0) continue;
      const Val rem = v.value(parts[j] & ~good_bit(best_removal_good(v, parts[j])));
      if (min_val < rem) {
        target = j;
        break;
      }
    }
    if (target < 0) return parts;

    const GoodMask sub = minimally_envied_subset(v, parts[min_idx], parts[target]);
    parts[target] = (parts[target] & ~sub) | parts[min_idx];
    parts[min_idx] = sub;
  }

  // Degenerate valuations can plateau; hand over to the authoritative path.
  return pr_bruteforce(ground, v, k, parts, caps);
}

PartList pr_run(const PartList& start, const Valuation& v, PrStrategy strategy, const Caps& caps) {
  if (strategy == PrStrategy::Brute)
    return pr_bruteforce(union_of(start), v, static_cast<int>(start.size()), start, caps);
  return pr_localsearch(start, v, caps);
}

}  // namespace efx
