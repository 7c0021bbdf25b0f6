#include "grouplab/perm_group.hpp"

#include <algorithm>

#include "grouplab/error.hpp"

namespace grouplab {

namespace {

int smallest_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.apply(i) != i) return i;
  return -1;
}

}  // namespace

StabilizerChain::StabilizerChain(int degree,
                                 const std::vector<Permutation>& generators)
    : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
    place(g);
  }
  close();
}

std::vector<const Permutation*> StabilizerChain::gens_at(
    std::size_t level) const {
  // S_level = strong generators fixing the first `level` base points, i.e.
  // everything introduced at this level or deeper.
  std::vector<const Permutation*> out;
  for (std::size_t j = level; j < levels_.size(); ++j)
    for (const auto& g : levels_[j].gens) out.push_back(&g);
  return out;
}

void StabilizerChain::recompute_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.orbit.clear();
  L.reps.clear();
  L.rep_of.assign(degree_, -1);
  L.orbit.push_back(L.base_point);
  L.reps.push_back(Permutation::identity(degree_));
  L.rep_of[L.base_point] = 0;
  auto gens = gens_at(level);
  for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
    int pt = L.orbit[qi];
    for (const Permutation* g : gens) {
      int to = g->apply(pt);
      if (L.rep_of[to] < 0) {
        L.rep_of[to] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(to);
        L.reps.push_back(compose(L.reps[qi], *g));
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(
    const Permutation& p) const {
  Permutation g = p;
  std::size_t l = 0;
  for (; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    int img = g.apply(L.base_point);
    if (img == L.base_point) continue;
    int k = L.rep_of[img];
    if (k < 0) break;
    g = compose(g, L.reps[k].inverse());
  }
  return {std::move(g), l};
}

std::size_t StabilizerChain::place(const Permutation& g) {
  auto [residue, stop] = sift(g);
  if (residue.is_identity()) return levels_.size();
  if (stop == levels_.size()) {
    Level L;
    L.base_point = smallest_moved_point(residue);
    levels_.push_back(std::move(L));
  }
  levels_[stop].gens.push_back(std::move(residue));
  // Orbits at this level and above may grow; refresh them all.
  for (std::size_t l = 0; l <= stop && l < levels_.size(); ++l)
    recompute_orbit(l);
  return stop;
}

void StabilizerChain::close() {
  // Fixpoint over Schreier generators. Each failed sift strictly enlarges
  // some orbit or adds a level, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < levels_.size() && !changed; ++l) {
      Level& L = levels_[l];
      auto gens = gens_at(l);
      for (std::size_t qi = 0; qi < L.orbit.size() && !changed; ++qi) {
        for (const Permutation* s : gens) {
          int to = s->apply(L.orbit[qi]);
          Permutation schreier =
              compose(compose(L.reps[qi], *s), L.reps[L.rep_of[to]].inverse());
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift(schreier);
          if (!residue.is_identity()) {
            place(schreier);
            changed = true;
            break;
          }
          (void)stop;
        }
      }
    }
  }
}

long long StabilizerChain::order() const {
  long long o = 1;
  for (const auto& L : levels_) o *= static_cast<long long>(L.orbit.size());
  return o;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  for (const auto& L : levels_) b.push_back(L.base_point);
  return b;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Error("degree mismatch in membership test");
  auto [residue, stop] = sift(p);
  (void)stop;
  return residue.is_identity();
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree),
      gens_(std::move(generators)),
      chain_(degree, gens_),
      order_(chain_.order()) {
  if (degree < 1) throw Error("group degree must be at least 1");
  if (gens_.empty()) throw Error("generator list must be nonempty");
  for (const auto& g : gens_)
    if (g.degree() != degree) throw Error("generator degree mismatch");
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Error("degree mismatch in membership test");
  return chain_.contains(p);
}

}  // namespace grouplab
