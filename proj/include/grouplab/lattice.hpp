#pragma once

#include <vector>

#include "grouplab/quotient.hpp"
#include "grouplab/subgroup.hpp"

namespace grouplab {

// Every subgroup of the ambient group, exactly once, sorted by
// (order, bitset-lex).
struct Lattice {
  std::vector<SubgroupSet> subgroups;
};

// Cyclic-extension enumeration: perfect subgroups are seeded first, then each
// layer extends known subgroups H by elements z of N(H) whose image in
// N(H)/H has prime order. Called through GroupContext::lattice() for caching.
Lattice build_lattice(const GroupContext& ctx);

const std::vector<SubgroupSet>& all_subgroups(const GroupContext& ctx);

std::vector<SubgroupSet> subgroups_of(const GroupContext& ctx,
                                      const SubgroupSet& A);
std::vector<SubgroupSet> normal_subgroups(const GroupContext& ctx);
std::vector<SubgroupSet> normal_subgroups_of(const GroupContext& ctx,
                                             const SubgroupSet& A);
std::vector<SubgroupSet> maximal_subgroups(const GroupContext& ctx);

// Nontrivial normal subgroups minimal under containment. Computed from
// normal closures of single elements, so it needs only the multiplication
// table, not the full lattice.
std::vector<SubgroupSet> minimal_normal_subgroups(const GroupContext& ctx);

SubgroupSet normal_closure(const GroupContext& ctx, const SubgroupSet& seed);

struct SylowFamily {
  int prime;
  long long member_order;          // p^a with p^a exactly dividing |B|
  std::vector<SubgroupSet> members;  // sorted bitset-lex; a conjugacy class
  long long count() const { return static_cast<long long>(members.size()); }
};

// Sylow p-subgroups of `within`, returned as ambient bitsets. When p does not
// divide |within| the family holds just the trivial subgroup.
SylowFamily sylow_subgroups(const GroupContext& ctx, const SubgroupSet& within,
                            int p);
SylowFamily sylow_subgroups(const GroupContext& ctx, int p);

// All subgroups whose order is the full primes-part of the ambient order.
std::vector<SubgroupSet> hall_subgroups(const GroupContext& ctx,
                                        const std::vector<int>& primes);

struct ChiefSeries {
  struct Factor {
    long long order;
    int p_group_prime;  // p when the factor is a p-group, else 0
  };
  std::vector<SubgroupSet> chain;  // descending, G first, trivial last
  std::vector<Factor> factors;     // factors[i] = chain[i] / chain[i+1]
};

ChiefSeries chief_series(const GroupContext& ctx);

std::vector<SubgroupSet> derived_series(const GroupContext& ctx);

}  // namespace grouplab
