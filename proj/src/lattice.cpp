#include "grouplab/lattice.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "grouplab/error.hpp"
#include "grouplab/numeric.hpp"

namespace grouplab {

namespace {

struct LatticeKey {
  long long order;
  DynBitset bits;
  bool operator<(const LatticeKey& o) const {
    if (order != o.order) return order < o.order;
    return DynBitset::lex_less(bits, o.bits);
  }
};

bool is_perfect(const GroupContext& ctx, const SubgroupSet& H) {
  return derived_subgroup(H).order() == H.order();
}

// All perfect subgroups: distinct closures of element pairs filtered for
// perfection, then saturated by single-generator extensions that stay
// perfect. Perfect groups at these orders are 2-generated, so this is
// exhaustive for every ambient the caps allow.
std::vector<SubgroupSet> perfect_subgroups(const GroupContext& ctx) {
  const int n = ctx.size();
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  std::vector<SubgroupSet> perfect;
  auto consider = [&](SubgroupSet H) {
    if (H.is_trivial()) return;
    if (!seen.insert(H.bits()).second) return;
    if (is_perfect(ctx, H)) perfect.push_back(std::move(H));
  };
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int gens[2] = {x, y};
      consider(SubgroupSet::generated(ctx, gens));
    }
  // Saturate upward.
  for (std::size_t k = 0; k < perfect.size(); ++k) {
    SubgroupSet P = perfect[k];
    for (int g = 1; g < n; ++g) {
      if (P.contains_element(g)) continue;
      std::vector<int> gens = P.generators();
      gens.push_back(g);
      consider(SubgroupSet::generated(ctx, gens));
    }
  }
  std::sort(perfect.begin(), perfect.end(), subgroup_less);
  return perfect;
}

}  // namespace

Lattice build_lattice(const GroupContext& ctx) {
  ctx.require_tables("subgroup enumeration");
  const int n = ctx.size();

  std::map<LatticeKey, SubgroupSet> found;
  auto insert = [&](const SubgroupSet& H) {
    LatticeKey key{H.order(), H.bits()};
    return found.emplace(std::move(key), H).second;
  };

  insert(SubgroupSet::trivial(ctx));
  for (auto& P : perfect_subgroups(ctx)) insert(P);

  const SubgroupSet whole = SubgroupSet::whole(ctx);

  // Keys of extensions are strictly larger than the key being processed, so a
  // single in-order sweep of the map visits everything.
  for (auto it = found.begin(); it != found.end(); ++it) {
    const SubgroupSet& H = it->second;
    if (H.order() == n) continue;
    SubgroupSet norm = H.is_trivial() ? whole : normalizer_in(whole, H);
    const DynBitset& nb = norm.bits();
    for (int z = nb.first_set(); z >= 0; z = nb.next_set(z)) {
      if (H.contains_element(z)) continue;
      // Order of Hz in N(H)/H: smallest k with z^k in H.
      int t = z;
      long long k = 1;
      while (!H.contains_element(t)) {
        t = ctx.mul(t, z);
        ++k;
      }
      if (!is_prime(k)) continue;
      // K = H<z> has order k|H| and is a subgroup since z normalizes H.
      DynBitset kb = H.bits();
      int zp = z;
      for (long long j = 1; j < k; ++j) {
        for (int h = H.bits().first_set(); h >= 0; h = H.bits().next_set(h))
          kb.set(ctx.mul(h, zp));
        zp = ctx.mul(zp, z);
      }
      std::vector<int> gens = H.generators();
      gens.push_back(z);
      SubgroupSet K(&ctx, std::move(kb), std::move(gens));
      if (K.order() != k * H.order())
        throw Error("cyclic extension produced a set of unexpected size");
      insert(K);
    }
  }

  Lattice lat;
  lat.subgroups.reserve(found.size());
  for (auto& [key, sub] : found) lat.subgroups.push_back(std::move(sub));
  return lat;
}

const std::vector<SubgroupSet>& all_subgroups(const GroupContext& ctx) {
  return ctx.lattice().subgroups;
}

std::vector<SubgroupSet> subgroups_of(const GroupContext& ctx,
                                      const SubgroupSet& A) {
  std::vector<SubgroupSet> out;
  for (const auto& H : all_subgroups(ctx))
    if (A.contains(H)) out.push_back(H);
  return out;
}

std::vector<SubgroupSet> normal_subgroups(const GroupContext& ctx) {
  return normal_subgroups_of(ctx, SubgroupSet::whole(ctx));
}

std::vector<SubgroupSet> normal_subgroups_of(const GroupContext& ctx,
                                             const SubgroupSet& A) {
  std::vector<SubgroupSet> out;
  for (const auto& H : all_subgroups(ctx))
    if (A.contains(H) && is_normal_in(H, A)) out.push_back(H);
  return out;
}

std::vector<SubgroupSet> maximal_subgroups(const GroupContext& ctx) {
  const auto& subs = all_subgroups(ctx);
  const int n = ctx.size();
  std::vector<SubgroupSet> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].order() == n) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (subs[j].order() <= subs[i].order() || subs[j].order() == n) continue;
      if (subs[j].contains(subs[i])) maximal = false;
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

SubgroupSet normal_closure(const GroupContext& ctx, const SubgroupSet& seed) {
  std::vector<int> gens = seed.generators();
  while (true) {
    DynBitset bits = closure_bits(ctx, gens);
    bool grew = false;
    for (int u = bits.first_set(); u >= 0 && !grew; u = bits.next_set(u))
      for (int g : ctx.generator_indices())
        if (!bits.test(ctx.conj(u, g))) {
          gens.push_back(ctx.conj(u, g));
          grew = true;
          break;
        }
    if (!grew) return SubgroupSet(&ctx, std::move(bits), std::move(gens));
  }
}

std::vector<SubgroupSet> minimal_normal_subgroups(const GroupContext& ctx) {
  ctx.require_tables("minimal normal subgroups");
  std::vector<SubgroupSet> closures;
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  for (int e = 1; e < ctx.size(); ++e) {
    SubgroupSet nc = normal_closure(ctx, SubgroupSet::cyclic(ctx, e));
    if (seen.insert(nc.bits()).second) closures.push_back(std::move(nc));
  }
  std::vector<SubgroupSet> out;
  for (const auto& c : closures) {
    bool minimal = true;
    for (const auto& d : closures)
      if (d.order() < c.order() && c.contains(d)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

SylowFamily sylow_subgroups(const GroupContext& ctx, const SubgroupSet& within,
                            int p) {
  if (!is_prime(p)) throw Error("sylow_subgroups: p must be prime");
  ctx.require_tables("sylow subgroups");
  SylowFamily fam;
  fam.prime = p;
  fam.member_order = p_part(within.order(), p);
  if (fam.member_order == 1) {
    fam.members.push_back(SubgroupSet::trivial(ctx));
    return fam;
  }

  // Grow one Sylow p-subgroup: while P is not full, its normalizer in
  // `within` contains an element whose image over P has order p.
  SubgroupSet P = SubgroupSet::trivial(ctx);
  while (P.order() < fam.member_order) {
    SubgroupSet norm = normalizer_in(within, P);
    bool extended = false;
    const DynBitset& nb = norm.bits();
    for (int z = nb.first_set(); z >= 0 && !extended; z = nb.next_set(z)) {
      if (P.contains_element(z)) continue;
      int t = z;
      long long k = 1;
      while (!P.contains_element(t)) {
        t = ctx.mul(t, z);
        ++k;
      }
      if (k % p) continue;
      int y = ctx.pow(z, k / p);  // image of order exactly p over P
      std::vector<int> gens = P.generators();
      gens.push_back(y);
      P = SubgroupSet::generated(ctx, gens);
      extended = true;
    }
    if (!extended)
      throw Error("sylow growth stalled; multiplication table inconsistent");
  }

  // The family is the conjugacy class of P under `within`.
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  std::vector<SubgroupSet> queue{P};
  seen.insert(P.bits());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    SubgroupSet cur = queue[qi];
    for (int g : within.generators()) {
      SubgroupSet c = conjugate_subgroup(cur, g);
      if (seen.insert(c.bits()).second) queue.push_back(std::move(c));
    }
  }
  std::sort(queue.begin(), queue.end(), subgroup_less);
  fam.members = std::move(queue);
  return fam;
}

SylowFamily sylow_subgroups(const GroupContext& ctx, int p) {
  return sylow_subgroups(ctx, SubgroupSet::whole(ctx), p);
}

std::vector<SubgroupSet> hall_subgroups(const GroupContext& ctx,
                                        const std::vector<int>& primes) {
  long long target = pi_part(ctx.size(), primes);
  std::vector<SubgroupSet> out;
  for (const auto& H : all_subgroups(ctx))
    if (H.order() == target) out.push_back(H);
  return out;
}

ChiefSeries chief_series(const GroupContext& ctx) {
  ctx.require_tables("chief series");
  // Ascending construction: pull back minimal normal subgroups of successive
  // quotients, lex-least pulled-back bitset first; then report descending.
  std::vector<SubgroupSet> ascending{SubgroupSet::trivial(ctx)};
  while (ascending.back().order() < ctx.size()) {
    const SubgroupSet& K = ascending.back();
    QuotientMap q = quotient_group(K);
    auto minimals = minimal_normal_subgroups(*q.quotient);
    if (minimals.empty())
      throw Error("chief series: quotient has no minimal normal subgroup");
    SubgroupSet best = SubgroupSet::trivial(ctx);
    bool have = false;
    for (const auto& m : minimals) {
      DynBitset pull(ctx.size());
      for (int i = 0; i < ctx.size(); ++i)
        if (m.contains_element(q.elem_image[i])) pull.set(i);
      SubgroupSet cand = SubgroupSet::from_bits(ctx, std::move(pull));
      if (!have || DynBitset::lex_less(cand.bits(), best.bits())) {
        best = std::move(cand);
        have = true;
      }
    }
    ascending.push_back(std::move(best));
  }

  ChiefSeries out;
  out.chain.assign(ascending.rbegin(), ascending.rend());
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
    long long f = out.chain[i].order() / out.chain[i + 1].order();
    int p = 0;
    is_prime_power(f, &p);
    out.factors.push_back({f, p});
  }
  return out;
}

std::vector<SubgroupSet> derived_series(const GroupContext& ctx) {
  ctx.require_tables("derived series");
  return derived_series(SubgroupSet::whole(ctx));
}

}  // namespace grouplab
