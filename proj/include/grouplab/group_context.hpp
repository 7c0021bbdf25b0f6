#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "grouplab/config.hpp"
#include "grouplab/perm.hpp"
#include "grouplab/perm_group.hpp"

namespace grouplab {

struct Lattice;

// Deterministic ordered list of all elements. Position 0 is the identity;
// the order is breadth-first over generator words, each layer sorted
// lexicographically on image sequences, so it depends only on the generator
// list. This is the substrate for subgroup bitsets.
struct ElementTable {
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, int, PermHash> index;

  int size() const { return static_cast<int>(elements.size()); }
  // -1 when absent.
  int index_of(const Permutation& p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  }
};

// Throws when the group order exceeds cap.
ElementTable enumerate_elements(const PermGroup& g, long long cap);

// A PermGroup together with its element table and, for lattice-eligible
// orders, dense multiplication/inverse/element-order tables. Immutable after
// creation and safe to share across threads; the subgroup lattice is computed
// once on first use.
class GroupContext {
 public:
  static std::shared_ptr<const GroupContext> create(PermGroup g,
                                                    Caps caps = {});
  ~GroupContext();

  const PermGroup& group() const { return group_; }
  const ElementTable& table() const { return table_; }
  const Caps& caps() const { return caps_; }
  int size() const { return table_.size(); }

  bool has_mul_table() const { return !mul_.empty(); }

  int mul(int i, int j) const { return mul_[i * n_ + j]; }
  int inv(int i) const { return inv_[i]; }
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
  long long order_of(int i) const { return elem_order_[i]; }
  int pow(int i, long long e) const;

  // Indices of the defining generators in the element table.
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  // Full subgroup lattice, cached. Throws when no multiplication table.
  const Lattice& lattice() const;

  void require_tables(const char* what) const;

 private:
  GroupContext(PermGroup g, Caps caps);

  PermGroup group_;
  Caps caps_;
  ElementTable table_;
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<long long> elem_order_;
  std::vector<int> gen_idx_;

  mutable std::once_flag lattice_once_;
  mutable std::shared_ptr<const Lattice> lattice_;
};

}  // namespace grouplab
