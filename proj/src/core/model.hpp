#pragma once

#include "errors.hpp"
#include "ints.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace efx {

// Goods are identified by index in [0, m); a bundle is a bitmask over good
// indices (bit k set = good k in the bundle).
using GoodMask = std::uint64_t;

constexpr int kMaxGoods = 62;       // bundle masks are 64-bit
constexpr int kTableMaxGoods = 20;  // table valuations store 2^m entries

inline GoodMask good_bit(int g) { return GoodMask{1} << g; }
inline GoodMask full_mask(int m) { return m == 0 ? GoodMask{0} : ((GoodMask{1} << m) - 1); }
inline int bundle_size(GoodMask s) { return std::popcount(s); }

std::vector<int> goods_of(GoodMask s);
std::string bundle_str(GoodMask s);

// Enumeration limits. Every exhaustive scan in the library is gated by one
// of these and fails loudly instead of running forever.
struct Caps {
  int nondegenerate_goods = 22;                  // 2^m subset values
  int mms_goods = 14;                            // 3^m partition pairs per check
  std::uint64_t oracle_allocations = 100000000;  // n^m bundle tuples
  std::uint64_t pr_assignments = 100000000;      // k^|ground| vectors
  std::uint64_t pr_iterations = 200000;          // local-search swaps
};

// A set function over bundles with exact integer values and v(empty) = 0.
// Additive valuations keep one value per good; table valuations keep one
// value per subset, indexed by bitmask.
class Valuation {
public:
  enum class Kind { Additive, Table };

  static Valuation additive(std::vector<Val> per_good);
  static Valuation table(int goods, std::vector<Val> by_mask);

  Kind kind() const { return kind_; }
  int goods() const { return m_; }
  bool monotone() const { return monotone_; }

  Val value(GoodMask s) const;
  Val good_value(int g) const { return value(good_bit(g)); }

  // True iff all 2^m subset values are pairwise distinct.
  bool is_nondegenerate(const Caps& caps) const;

  // All 2^m subset values indexed by mask. Gated by max_goods.
  std::vector<Val> all_subset_values(int max_goods) const;

  // v'(S) = v(S) * 2^m + sum_{g in S} 2^g. Breaks every value tie while
  // preserving all strict comparisons, so the result is non-degenerate and
  // any strict comparison on it implies a non-strict one on the original.
  Valuation perturbed() const;

private:
  Valuation() = default;

  Kind kind_ = Kind::Additive;
  int m_ = 0;
  bool monotone_ = true;
  std::vector<Val> values_;
};

inline bool is_monotone(const Valuation& v) { return v.monotone(); }
inline bool is_nondegenerate(const Valuation& v, const Caps& caps) {
  return v.is_nondegenerate(caps);
}

struct Instance {
  int m = 0;
  std::vector<std::string> agent_names;
  std::vector<int> agent_valuation;        // agent index -> valuation slot
  std::vector<std::string> valuation_ids;  // slot -> id used in files
  std::vector<Valuation> valuations;

  int agents() const { return static_cast<int>(agent_names.size()); }
  const Valuation& valuation_of_agent(int i) const { return valuations[agent_valuation[i]]; }

  void validate() const;  // throws ParseError on structural problems
};

struct Allocation {
  std::vector<GoodMask> bundles;
  std::vector<int> agent_to_bundle;
};

// Bundles pairwise disjoint, union covers all goods, assignment bijective.
bool validate_allocation(const Instance& inst, const Allocation& x);

// Applies Valuation::perturbed to every valuation of the instance.
Instance perturb(const Instance& inst);

}  // namespace efx
