#include "grouplab/group_context.hpp"

#include <algorithm>

#include "grouplab/error.hpp"
#include "grouplab/lattice.hpp"

namespace grouplab {

ElementTable enumerate_elements(const PermGroup& g, long long cap) {
  if (g.order() > cap)
    throw Error("group too large for lattice operations: order " +
                std::to_string(g.order()) + " exceeds cap " +
                std::to_string(cap));
  ElementTable t;
  Permutation id = Permutation::identity(g.degree());
  t.elements.push_back(id);
  t.index.emplace(id, 0);
  std::vector<Permutation> layer{id};
  while (!layer.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : layer) {
      for (const auto& gen : g.generators()) {
        Permutation y = compose(x, gen);
        if (!t.index.count(y)) {
          t.index.emplace(y, -1);  // reserve; real index assigned below
          next.push_back(std::move(y));
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& y : next) {
      t.index[y] = t.size();
      t.elements.push_back(y);
    }
    layer = std::move(next);
  }
  return t;
}

GroupContext::GroupContext(PermGroup g, Caps caps)
    : group_(std::move(g)),
      caps_(caps),
      table_(enumerate_elements(group_, caps.element_cap)) {
  if (table_.size() != group_.order())
    throw Error("element enumeration disagrees with stabilizer chain order");
  n_ = table_.size();
  for (const auto& gen : group_.generators())
    gen_idx_.push_back(table_.index_of(gen));

  if (n_ <= caps_.lattice_cap) {
    mul_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        mul_[static_cast<std::size_t>(i) * n_ + j] =
            table_.index_of(compose(table_.elements[i], table_.elements[j]));
    inv_.resize(n_);
    for (int i = 0; i < n_; ++i)
      inv_[i] = table_.index_of(table_.elements[i].inverse());
    elem_order_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      long long o = 1;
      int x = i;
      while (x != 0) {
        x = mul(x, i);
        ++o;
      }
      elem_order_[i] = o;
    }
  }
}

GroupContext::~GroupContext() = default;

std::shared_ptr<const GroupContext> GroupContext::create(PermGroup g,
                                                         Caps caps) {
  return std::shared_ptr<const GroupContext>(
      new GroupContext(std::move(g), caps));
}

int GroupContext::pow(int i, long long e) const {
  long long m = elem_order_[i];
  e %= m;
  if (e < 0) e += m;
  int acc = 0;  // identity
  int base = i;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

void GroupContext::require_tables(const char* what) const {
  if (!has_mul_table())
    throw Error(std::string(what) +
                ": group too large for lattice operations (order " +
                std::to_string(n_) + " exceeds cap " +
                std::to_string(caps_.lattice_cap) + ")");
}

const Lattice& GroupContext::lattice() const {
  require_tables("subgroup lattice");
  std::call_once(lattice_once_, [this] {
    lattice_ = std::make_shared<const Lattice>(build_lattice(*this));
  });
  return *lattice_;
}

}  // namespace grouplab
