#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grouplab {

// Fixed-width bitset over element indices of an enumerated group. Subgroups
// are carried around as these, so the hot operations are and/or, popcount,
// subset tests and a stable total order.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size_bits() const { return nbits_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

  // Total order: membership sequences compared from index 0, absent < present.
  // Used everywhere a deterministic tie-break between subgroups is needed.
  static bool lex_less(const DynBitset& a, const DynBitset& b) {
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      uint64_t diff = a.w_[k] ^ b.w_[k];
      if (diff) {
        int bit = std::countr_zero(diff);
        return !((a.w_[k] >> bit) & 1u);
      }
    }
    return false;
  }

  int first_set() const { return next_set(-1); }
  // Smallest set index > after, or -1.
  int next_set(int after) const {
    int start = after + 1;
    if (start >= nbits_) return -1;
    std::size_t k = start >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
      if (++k >= w_.size()) return -1;
      w = w_[k];
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = first_set(); i >= 0; i = next_set(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const noexcept { return b.hash(); }
};

}  // namespace grouplab
