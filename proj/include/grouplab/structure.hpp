#pragma once

#include <memory>
#include <vector>

#include "grouplab/lattice.hpp"
#include "grouplab/subgroup.hpp"

namespace grouplab {

bool is_cyclic(const SubgroupSet& X);
bool is_abelian(const SubgroupSet& X);
bool is_soluble(const SubgroupSet& X);  // derived series reaches 1

// Chain-based route without element enumeration; works above the caps.
bool is_soluble(const PermGroup& g);

// Normal-Sylow criterion; the lower central series route is kept alongside as
// a cross-check (tests require the two to agree).
bool is_nilpotent(const GroupContext& ctx);
bool is_nilpotent_lcs(const GroupContext& ctx);

bool is_soluble(const GroupContext& ctx);
bool is_supersoluble(const GroupContext& ctx);
bool is_p_soluble(const GroupContext& ctx, int p);
bool is_p_supersoluble(const GroupContext& ctx, int p);
// True iff there is a normal subgroup of order |G| / p^a.
bool is_p_nilpotent(const GroupContext& ctx, int p);

// Largest normal soluble subgroup S(G).
SubgroupSet soluble_radical(const GroupContext& ctx);

struct MaximalIndexEntry {
  long long subgroup_order;
  long long index;
  bool index_is_prime;
  bool index_is_prime_power;
};
// One entry per maximal subgroup, in lattice order.
std::vector<MaximalIndexEntry> maximal_index_profile(const GroupContext& ctx);

// Re-anchors a subgroup as a standalone enumerated group on the ambient
// degree, for predicates that need its own lattice or chief series.
std::shared_ptr<const GroupContext> as_group(const SubgroupSet& X);

struct PrimeProfile {
  int p;
  long long sylow_order;
  long long sylow_count;
  bool sylow_cyclic;
  bool p_soluble;
  bool p_supersoluble;
  bool p_nilpotent;
};

struct StructureProfile {
  long long order = 0;
  bool cyclic = false;
  bool abelian = false;
  bool nilpotent = false;
  bool supersoluble = false;
  bool soluble = false;
  std::vector<PrimeProfile> primes;  // one per p in pi(G), ascending
  long long soluble_radical_order = 0;
  std::vector<MaximalIndexEntry> maximal_profile;
  std::vector<long long> chief_factor_orders;  // descending chain order
};

StructureProfile compute_profile(const GroupContext& ctx);

}  // namespace grouplab
