#include "grouplab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "grouplab/error.hpp"

namespace grouplab {

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw Error("permutation degree must be at least 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw Error("permutation degree must be at least 1");
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree())
      throw Error("permutation image out of range");
    if (seen[v]) throw Error("permutation images are not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

long long Permutation::element_order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, (long long)c.size());
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("degree mismatch in permutation product");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q.apply(p.apply(i));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree())
    throw Error("degree mismatch in conjugation");
  // g^-1 x g evaluated pointwise, avoiding two temporaries.
  std::vector<int> img(x.degree());
  for (int i = 0; i < x.degree(); ++i) img[g.apply(i)] = g.apply(x.apply(i));
  return Permutation(std::move(img));
}

Permutation parse_permutation(const std::string& text, int degree) {
  if (degree < 1) throw Error("permutation degree must be at least 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw Error("expected a permutation, got empty text");

  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw Error("unexpected character '" + std::string(1, text[i]) +
                  "' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {  // tolerate comma separators
        ++i;
        continue;
      }
      if (!std::isdigit((unsigned char)text[i]))
        throw Error("unexpected character '" + std::string(1, text[i]) +
                    "' inside cycle");
      int v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw Error("point " + std::to_string(v) + " out of range 1.." +
                    std::to_string(degree));
      if (used[v - 1])
        throw Error("cycles not disjoint: point " + std::to_string(v) +
                    " appears twice");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    saw_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  if (!saw_cycle) throw Error("expected at least one cycle or \"()\"");
  return Permutation(std::move(img));
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grouplab
