#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grouplab/bitset.hpp"
#include "grouplab/group_context.hpp"

namespace grouplab {

// A subgroup of an ambient enumerated group, stored as an element-index
// bitset plus a small generating set. The ambient context must outlive every
// SubgroupSet built on it.
class SubgroupSet {
 public:
  SubgroupSet(const GroupContext* ctx, DynBitset bits, std::vector<int> gens);

  static SubgroupSet trivial(const GroupContext& ctx);
  static SubgroupSet whole(const GroupContext& ctx);
  static SubgroupSet generated(const GroupContext& ctx,
                               std::span<const int> elem_indices);
  static SubgroupSet cyclic(const GroupContext& ctx, int elem);
  // Trusts that bits is closed; derives a generating set.
  static SubgroupSet from_bits(const GroupContext& ctx, DynBitset bits);

  const GroupContext& ctx() const { return *ctx_; }
  const GroupContext* ctx_ptr() const { return ctx_; }
  const DynBitset& bits() const { return bits_; }
  long long order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole_group() const { return order_ == ctx_->size(); }

  bool contains_element(int i) const { return bits_.test(i); }
  bool contains(const SubgroupSet& other) const;  // superset as element sets

  // Small generating set (element indices), deterministic for a fixed bitset
  // and construction path.
  const std::vector<int>& generators() const { return gens_; }

  // Generators rendered in cycle notation, for reports.
  std::vector<std::string> generator_strings() const;

  bool operator==(const SubgroupSet& o) const { return bits_ == o.bits_; }

 private:
  const GroupContext* ctx_;
  DynBitset bits_;
  long long order_;
  std::vector<int> gens_;
};

// (order, bitset-lex) total order used for all deterministic subgroup lists.
bool subgroup_less(const SubgroupSet& a, const SubgroupSet& b);

// Closure of the given elements under the ambient multiplication table.
DynBitset closure_bits(const GroupContext& ctx, std::span<const int> gens);

// Greedy deterministic generating set for a closed bitset.
std::vector<int> derive_generators(const GroupContext& ctx,
                                   const DynBitset& bits);

struct ProductResult {
  DynBitset elements;   // XY as an element set
  long long size;       // |XY|; always |X||Y|/|X∩Y|
  bool is_subgroup;     // XY == YX
};

// The set {xy : x in X, y in Y}. is_subgroup is true exactly when the two
// one-sided products coincide as sets.
ProductResult set_product(const SubgroupSet& X, const SubgroupSet& Y);

SubgroupSet intersection(const SubgroupSet& X, const SubgroupSet& Y);
SubgroupSet join(const SubgroupSet& X, const SubgroupSet& Y);

// The conjugate subgroup X^g for an ambient element index g.
SubgroupSet conjugate_subgroup(const SubgroupSet& X, int g);

// X normal in A; requires X <= A as element sets.
bool is_normal_in(const SubgroupSet& X, const SubgroupSet& A);

SubgroupSet normalizer_in(const SubgroupSet& A, const SubgroupSet& X);
SubgroupSet centralizer_in(const SubgroupSet& A, const SubgroupSet& X);
SubgroupSet centre(const SubgroupSet& A);

// Commutator subgroup [A, A].
SubgroupSet derived_subgroup(const SubgroupSet& A);
// Descending derived series A >= A' >= A'' >= ... until stable.
std::vector<SubgroupSet> derived_series(const SubgroupSet& A);
// [A, G] style lower central series of A (within A).
std::vector<SubgroupSet> lower_central_series(const SubgroupSet& A);

void require_same_ambient(const SubgroupSet& X, const SubgroupSet& Y);

}  // namespace grouplab
