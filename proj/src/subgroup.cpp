#include "grouplab/subgroup.hpp"

#include <algorithm>

#include "grouplab/error.hpp"

namespace grouplab {

void require_same_ambient(const SubgroupSet& X, const SubgroupSet& Y) {
  if (X.ctx_ptr() != Y.ctx_ptr())
    throw Error("subgroups live in different ambient groups");
}

DynBitset closure_bits(const GroupContext& ctx, std::span<const int> gens) {
  DynBitset bits(ctx.size());
  bits.set(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int g : gens) {
      int v = ctx.mul(u, g);
      if (!bits.test(v)) {
        bits.set(v);
        stack.push_back(v);
      }
    }
  }
  return bits;
}

std::vector<int> derive_generators(const GroupContext& ctx,
                                   const DynBitset& bits) {
  std::vector<int> gens;
  DynBitset have(ctx.size());
  have.set(0);
  for (int i = bits.first_set(); i >= 0; i = bits.next_set(i)) {
    if (have.test(i)) continue;
    gens.push_back(i);
    have = closure_bits(ctx, gens);
  }
  if (gens.empty()) gens.push_back(0);
  return gens;
}

SubgroupSet::SubgroupSet(const GroupContext* ctx, DynBitset bits,
                         std::vector<int> gens)
    : ctx_(ctx),
      bits_(std::move(bits)),
      order_(bits_.count()),
      gens_(std::move(gens)) {}

SubgroupSet SubgroupSet::trivial(const GroupContext& ctx) {
  DynBitset b(ctx.size());
  b.set(0);
  return SubgroupSet(&ctx, std::move(b), {0});
}

SubgroupSet SubgroupSet::whole(const GroupContext& ctx) {
  DynBitset b(ctx.size());
  for (int i = 0; i < ctx.size(); ++i) b.set(i);
  std::vector<int> gens = ctx.generator_indices();
  if (gens.empty()) gens.push_back(0);
  return SubgroupSet(&ctx, std::move(b), std::move(gens));
}

SubgroupSet SubgroupSet::generated(const GroupContext& ctx,
                                   std::span<const int> elem_indices) {
  std::vector<int> gens(elem_indices.begin(), elem_indices.end());
  if (gens.empty()) gens.push_back(0);
  DynBitset b = closure_bits(ctx, gens);
  return SubgroupSet(&ctx, std::move(b), std::move(gens));
}

SubgroupSet SubgroupSet::cyclic(const GroupContext& ctx, int elem) {
  int g[1] = {elem};
  return generated(ctx, g);
}

SubgroupSet SubgroupSet::from_bits(const GroupContext& ctx, DynBitset bits) {
  auto gens = derive_generators(ctx, bits);
  return SubgroupSet(&ctx, std::move(bits), std::move(gens));
}

bool SubgroupSet::contains(const SubgroupSet& other) const {
  require_same_ambient(*this, other);
  return other.bits_.is_subset_of(bits_);
}

std::vector<std::string> SubgroupSet::generator_strings() const {
  std::vector<std::string> out;
  for (int g : gens_)
    out.push_back(ctx_->table().elements[g].cycle_string());
  return out;
}

bool subgroup_less(const SubgroupSet& a, const SubgroupSet& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return DynBitset::lex_less(a.bits(), b.bits());
}

ProductResult set_product(const SubgroupSet& X, const SubgroupSet& Y) {
  require_same_ambient(X, Y);
  const GroupContext& ctx = X.ctx();
  auto xs = X.bits().to_indices();
  auto ys = Y.bits().to_indices();
  DynBitset xy(ctx.size());
  for (int x : xs)
    for (int y : ys) xy.set(ctx.mul(x, y));
  DynBitset yx(ctx.size());
  for (int y : ys)
    for (int x : xs) yx.set(ctx.mul(y, x));
  ProductResult r;
  r.size = xy.count();
  r.is_subgroup = (xy == yx);
  r.elements = std::move(xy);
  return r;
}

SubgroupSet intersection(const SubgroupSet& X, const SubgroupSet& Y) {
  require_same_ambient(X, Y);
  return SubgroupSet::from_bits(X.ctx(), X.bits() & Y.bits());
}

SubgroupSet join(const SubgroupSet& X, const SubgroupSet& Y) {
  require_same_ambient(X, Y);
  std::vector<int> gens = X.generators();
  gens.insert(gens.end(), Y.generators().begin(), Y.generators().end());
  DynBitset b = closure_bits(X.ctx(), gens);
  return SubgroupSet(X.ctx_ptr(), std::move(b), std::move(gens));
}

SubgroupSet conjugate_subgroup(const SubgroupSet& X, int g) {
  const GroupContext& ctx = X.ctx();
  DynBitset b(ctx.size());
  for (int x = X.bits().first_set(); x >= 0; x = X.bits().next_set(x))
    b.set(ctx.conj(x, g));
  std::vector<int> gens;
  for (int s : X.generators()) gens.push_back(ctx.conj(s, g));
  return SubgroupSet(X.ctx_ptr(), std::move(b), std::move(gens));
}

bool is_normal_in(const SubgroupSet& X, const SubgroupSet& A) {
  require_same_ambient(X, A);
  if (!A.contains(X)) throw Error("normality test: X is not inside A");
  const GroupContext& ctx = X.ctx();
  // X^a = X for generators a of A suffices, and per-generator it suffices
  // that the generators of X land back in X.
  for (int a : A.generators())
    for (int s : X.generators())
      if (!X.contains_element(ctx.conj(s, a))) return false;
  return true;
}

SubgroupSet normalizer_in(const SubgroupSet& A, const SubgroupSet& X) {
  require_same_ambient(A, X);
  const GroupContext& ctx = A.ctx();
  DynBitset b(ctx.size());
  for (int a = A.bits().first_set(); a >= 0; a = A.bits().next_set(a)) {
    bool ok = true;
    for (int s : X.generators())
      if (!X.contains_element(ctx.conj(s, a))) {
        ok = false;
        break;
      }
    if (ok) b.set(a);
  }
  return SubgroupSet::from_bits(ctx, std::move(b));
}

SubgroupSet centralizer_in(const SubgroupSet& A, const SubgroupSet& X) {
  require_same_ambient(A, X);
  const GroupContext& ctx = A.ctx();
  DynBitset b(ctx.size());
  for (int a = A.bits().first_set(); a >= 0; a = A.bits().next_set(a)) {
    bool ok = true;
    for (int s : X.generators())
      if (ctx.mul(a, s) != ctx.mul(s, a)) {
        ok = false;
        break;
      }
    if (ok) b.set(a);
  }
  return SubgroupSet::from_bits(ctx, std::move(b));
}

SubgroupSet centre(const SubgroupSet& A) { return centralizer_in(A, A); }

SubgroupSet derived_subgroup(const SubgroupSet& A) {
  const GroupContext& ctx = A.ctx();
  auto elems = A.bits().to_indices();
  std::vector<int> comms;
  DynBitset seen(ctx.size());
  for (int a : elems)
    for (int b : elems) {
      int c = ctx.mul(ctx.mul(ctx.inv(a), ctx.inv(b)), ctx.mul(a, b));
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  DynBitset bits = closure_bits(ctx, comms);
  return SubgroupSet(&ctx, std::move(bits), derive_generators(ctx, seen));
}

std::vector<SubgroupSet> derived_series(const SubgroupSet& A) {
  std::vector<SubgroupSet> series{A};
  while (true) {
    SubgroupSet next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::vector<SubgroupSet> lower_central_series(const SubgroupSet& A) {
  const GroupContext& ctx = A.ctx();
  std::vector<SubgroupSet> series{A};
  while (true) {
    const SubgroupSet& cur = series.back();
    // [cur, A]: commutators of the current term against the whole of A.
    std::vector<int> comms;
    DynBitset seen(ctx.size());
    for (int x = cur.bits().first_set(); x >= 0; x = cur.bits().next_set(x))
      for (int a = A.bits().first_set(); a >= 0; a = A.bits().next_set(a)) {
        int c = ctx.mul(ctx.mul(ctx.inv(x), ctx.inv(a)), ctx.mul(x, a));
        if (!seen.test(c)) {
          seen.set(c);
          comms.push_back(c);
        }
      }
    DynBitset bits = closure_bits(ctx, comms);
    SubgroupSet next = SubgroupSet::from_bits(ctx, std::move(bits));
    if (next.order() == cur.order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

}  // namespace grouplab
