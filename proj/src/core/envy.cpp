#include "envy.hpp"

#include <algorithm>

namespace efx {

namespace {

void require_disjoint(GoodMask a, GoodMask b, const char* who) {
  if ((a & b) != 0) throw PreconditionError(std::string(who) + ": bundles must be disjoint");
}

}  // namespace

EnvyReport strong_envy(const Valuation& v, GoodMask own, GoodMask other) {
  require_disjoint(own, other, "strong_envy");
  EnvyReport r;
  const Val own_value = v.value(own);
  r.envies = own_value < v.value(other);
  for (int g : goods_of(other)) {
    if (own_value < v.value(other & ~good_bit(g))) {
      r.strongly_envies = true;
      r.witness_good = g;
      break;
    }
  }
  return r;
}

bool is_efx_feasible(const Valuation& v, GoodMask s, GoodMask t) {
  require_disjoint(s, t, "is_efx_feasible");
  const Val sv = v.value(s);
  for (int g : goods_of(t))
    if (!(v.value(t & ~good_bit(g)) < sv)) return false;
  return true;
}

std::vector<int> feasible_set(const std::vector<GoodMask>& bundles, const Valuation& v) {
  std::vector<int> out;
  const int k = static_cast<int>(bundles.size());
  for (int i = 0; i < k; ++i) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      if (j != i) ok = is_efx_feasible(v, bundles[i], bundles[j]);
    if (ok) out.push_back(i);
  }
  return out;
}

std::optional<StrongEnvyWitness> find_strong_envy(const Instance& inst, const Allocation& x) {
  if (!validate_allocation(inst, x))
    throw PreconditionError("find_strong_envy: invalid allocation");
  const int n = inst.agents();
  for (int i = 0; i < n; ++i) {
    const Valuation& v = inst.valuation_of_agent(i);
    const GoodMask own = x.bundles[x.agent_to_bundle[i]];
    const Val own_value = v.value(own);
    for (int j = 0; j < n; ++j) {
      if (j == x.agent_to_bundle[i]) continue;
      for (int g : goods_of(x.bundles[j])) {
        if (own_value < v.value(x.bundles[j] & ~good_bit(g)))
          return StrongEnvyWitness{i, j, g};
      }
    }
  }
  return std::nullopt;
}

bool is_efx(const Instance& inst, const Allocation& x) { return !find_strong_envy(inst, x); }

GoodMask minimally_envied_subset(const Valuation& v, GoodMask own, GoodMask envied) {
  require_disjoint(own, envied, "minimally_envied_subset");
  const Val own_value = v.value(own);
  if (!(own_value < v.value(envied)))
    throw PreconditionError("minimally_envied_subset: no envy toward the target bundle");

  // Examination order is fixed by the full bundle: cheapest good first,
  // i.e. descending remainder v(envied \ g). For additive valuations this
  // is ascending single-good value.
  std::vector<int> order = goods_of(envied);
  std::vector<Val> rem(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    rem[i] = v.value(envied & ~good_bit(order[i]));
  std::vector<std::size_t> idx(order.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });

  GoodMask s = envied;
  for (std::size_t i : idx) {
    const GoodMask without = s & ~good_bit(order[i]);
    if (own_value < v.value(without)) s = without;
  }
  return s;
}

int best_removal_good(const Valuation& v, GoodMask t) {
  if (t == 0) throw PreconditionError("best_removal_good: empty bundle");
  int best = -1;
  Val best_rem(0);
  for (int g : goods_of(t)) {
    const Val r = v.value(t & ~good_bit(g));
    if (best < 0 || r > best_rem) {
      best = g;
      best_rem = r;
    }
  }
  return best;
}

}  // namespace efx
