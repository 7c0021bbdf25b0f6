#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace grouplab {

// A bijection of {0..n-1}. Points are 0-based in code; cycle notation and the
// group file format use 1-based points.
class Permutation {
 public:
  static Permutation identity(int degree);

  // images[i] is the image of point i; must be a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  long long element_order() const;  // lcm of cycle lengths

  // Non-trivial cycles, each starting at its smallest point, sorted by it.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // "(1 2 3)(4 5)"; "()" for the identity

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lex on images

 private:
  std::vector<int> img_;
};

// Left-to-right action: compose(p, q) maps i to q(p(i)). This convention is
// fixed project-wide; tests pin it.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// g^-1 x g under the left-to-right convention.
Permutation conjugate(const Permutation& x, const Permutation& g);

// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
// "()" denotes the identity. Throws Error on syntax problems, out-of-range
// points and non-disjoint cycles.
Permutation parse_permutation(const std::string& text, int degree);

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace grouplab
