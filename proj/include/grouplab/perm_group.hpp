#pragma once

#include <utility>
#include <vector>

#include "grouplab/perm.hpp"

namespace grouplab {

// Base-and-strong-generators structure built by a deterministic (unrandomized)
// Schreier-Sims run. Degrees here are desk scale, so the simple quadratic
// construction is fine and keeps output reproducible.
class StabilizerChain {
 public:
  struct Level {
    int base_point;
    std::vector<Permutation> gens;  // strong gens introduced at this level
    std::vector<int> orbit;         // BFS discovery order, starts at base_point
    std::vector<int> rep_of;        // point -> index into reps, -1 outside orbit
    std::vector<Permutation> reps;  // base_point^reps[k] == orbit[k]
  };

  StabilizerChain(int degree, const std::vector<Permutation>& generators);

  int degree() const { return degree_; }
  long long order() const;  // product of orbit lengths
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<int> base() const;

  bool contains(const Permutation& p) const;
  // Residue of sifting p and the number of levels consumed.
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const;

 private:
  int degree_;
  std::vector<Level> levels_;

  std::vector<const Permutation*> gens_at(std::size_t level) const;
  void recompute_orbit(std::size_t level);
  // Inserts a non-identity residue at its sift stop level; returns stop level.
  std::size_t place(const Permutation& g);
  void close();
};

// Generators + degree + stabilizer chain; the handle for a whole group.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  long long order() const { return order_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return chain_; }

  bool contains(const Permutation& p) const;

 private:
  int degree_;
  std::vector<Permutation> gens_;
  StabilizerChain chain_;
  long long order_;
};

}  // namespace grouplab
