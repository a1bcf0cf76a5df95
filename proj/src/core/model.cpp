#include "model.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace efx {

std::vector<int> goods_of(GoodMask s) {
  std::vector<int> out;
  while (s != 0) {
    int g = std::countr_zero(s);
    out.push_back(g);
    s &= s - 1;
  }
  return out;
}

std::string bundle_str(GoodMask s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int g : goods_of(s)) {
    if (!first) os << ',';
    os << g;
    first = false;
  }
  os << '}';
  return os.str();
}

Valuation Valuation::additive(std::vector<Val> per_good) {
  if (per_good.size() > static_cast<std::size_t>(kMaxGoods))
    throw ParseError("additive valuation: too many goods");
  for (const Val& v : per_good)
    if (v < Val(1))
      throw ParseError("additive valuation: every good must have a positive value");
  Valuation v;
  v.kind_ = Kind::Additive;
  v.m_ = static_cast<int>(per_good.size());
  v.monotone_ = true;
  v.values_ = std::move(per_good);
  return v;
}

Valuation Valuation::table(int goods, std::vector<Val> by_mask) {
  if (goods < 0 || goods > kTableMaxGoods)
    throw ParseError("table valuation: good count must be in [0, " +
                     std::to_string(kTableMaxGoods) + "]");
  if (by_mask.size() != (std::size_t{1} << goods))
    throw ParseError("table valuation: expected 2^m entries");
  if (by_mask[0] != Val(0)) throw ParseError("table valuation: the empty bundle must be worth 0");
  for (const Val& v : by_mask)
    if (v < Val(0)) throw ParseError("table valuation: negative values are not supported");

  Valuation v;
  v.kind_ = Kind::Table;
  v.m_ = goods;
  v.values_ = std::move(by_mask);
  v.monotone_ = true;
  const GoodMask all = full_mask(goods);
  for (GoodMask s = 0; s <= all && v.monotone_; ++s) {
    for (int g = 0; g < goods; ++g) {
      if ((s & good_bit(g)) != 0) continue;
      if (v.values_[s] > v.values_[s | good_bit(g)]) {
        v.monotone_ = false;
        break;
      }
    }
    if (s == all) break;
  }
  return v;
}

Val Valuation::value(GoodMask s) const {
  if (kind_ == Kind::Additive) {
    if ((s & ~full_mask(m_)) != 0) throw ParseError("bundle refers to goods outside the instance");
    Val sum(0);
    GoodMask rest = s;
    while (rest != 0) {
      sum += values_[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    return sum;
  }
  if (s >= values_.size()) throw ParseError("subset index out of range for table valuation");
  return values_[s];
}

std::vector<Val> Valuation::all_subset_values(int max_goods) const {
  if (m_ > max_goods)
    throw CapError("subset enumeration over " + std::to_string(m_) +
                   " goods exceeds the configured cap of " + std::to_string(max_goods));
  if (kind_ == Kind::Table) return values_;
  std::vector<Val> out(std::size_t{1} << m_);
  out[0] = Val(0);
  for (GoodMask s = 1; s < out.size(); ++s)
    out[s] = out[s & (s - 1)] + values_[std::countr_zero(s)];
  return out;
}

bool Valuation::is_nondegenerate(const Caps& caps) const {
  std::vector<Val> vals = all_subset_values(caps.nondegenerate_goods);
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

Valuation Valuation::perturbed() const {
  const Val scale = Val::pow2(m_);
  if (kind_ == Kind::Additive) {
    std::vector<Val> out(values_.size());
    for (int g = 0; g < m_; ++g) out[g] = values_[g] * scale + Val::pow2(g);
    return additive(std::move(out));
  }
  std::vector<Val> out(values_.size());
  for (GoodMask s = 0; s < values_.size(); ++s)
    out[s] = values_[s] * scale + Val::from_u64(s);
  return table(m_, std::move(out));
}

void Instance::validate() const {
  if (m < 0 || m > kMaxGoods) throw ParseError("good count must be in [0, 62]");
  if (agent_names.empty()) throw ParseError("instance needs at least one agent");
  if (agent_valuation.size() != agent_names.size() || valuation_ids.size() != valuations.size())
    throw ParseError("instance arrays are inconsistent");
  for (int slot : agent_valuation)
    if (slot < 0 || slot >= static_cast<int>(valuations.size()))
      throw ParseError("agent references a missing valuation");
  for (const Valuation& v : valuations)
    if (v.goods() != m) throw ParseError("valuation good count differs from the instance");
  std::vector<std::string> names = agent_names;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw ParseError("agent names must be unique");
  std::vector<std::string> ids = valuation_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ParseError("valuation ids must be unique");
}

bool validate_allocation(const Instance& inst, const Allocation& x) {
  const int n = inst.agents();
  if (static_cast<int>(x.bundles.size()) != n) return false;
  if (static_cast<int>(x.agent_to_bundle.size()) != n) return false;

  GoodMask seen = 0;
  for (GoodMask b : x.bundles) {
    if ((b & ~full_mask(inst.m)) != 0) return false;
    if ((b & seen) != 0) return false;  // overlap
    seen |= b;
  }
  if (seen != full_mask(inst.m)) return false;  // incomplete

  std::vector<bool> used(n, false);
  for (int idx : x.agent_to_bundle) {
    if (idx < 0 || idx >= n || used[idx]) return false;
    used[idx] = true;
  }
  return true;
}

Instance perturb(const Instance& inst) {
  Instance out = inst;
  for (Valuation& v : out.valuations) v = v.perturbed();
  return out;
}

}  // namespace efx
