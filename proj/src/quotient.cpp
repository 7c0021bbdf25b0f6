#include "grouplab/quotient.hpp"

#include "grouplab/error.hpp"

namespace grouplab {

SubgroupSet QuotientMap::image_of(const SubgroupSet& sub) const {
  DynBitset b(quotient->size());
  for (int i = sub.bits().first_set(); i >= 0; i = sub.bits().next_set(i))
    b.set(elem_image[i]);
  return SubgroupSet::from_bits(*quotient, std::move(b));
}

QuotientMap quotient_group(const SubgroupSet& N) {
  const GroupContext& ctx = N.ctx();
  if (!is_normal_in(N, SubgroupSet::whole(ctx)))
    throw Error("quotient requires a normal subgroup");

  const int n = ctx.size();
  // Right cosets Nx, numbered in element-table order; coset 0 is N itself.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int x = N.bits().first_set(); x >= 0; x = N.bits().next_set(x))
      coset_of[ctx.mul(x, i)] = c;
  }
  const int m = static_cast<int>(reps.size());

  auto action_of = [&](int g) {
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = coset_of[ctx.mul(reps[c], g)];
    return Permutation(std::move(img));
  };

  std::vector<Permutation> qgens;
  for (int g : ctx.generator_indices()) qgens.push_back(action_of(g));
  if (qgens.empty()) qgens.push_back(Permutation::identity(m));

  PermGroup qgroup(m, std::move(qgens));
  if (qgroup.order() != m)
    throw Error("coset action has unexpected order");  // kernel must be N

  QuotientMap out;
  out.quotient = GroupContext::create(std::move(qgroup), ctx.caps());
  out.index = m;
  out.elem_image.resize(n);
  for (int i = 0; i < n; ++i) {
    int idx = out.quotient->table().index_of(action_of(i));
    if (idx < 0) throw Error("coset action image missing from quotient table");
    out.elem_image[i] = idx;
  }
  return out;
}

}  // namespace grouplab
