#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grouplab {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization as (p, exponent) pairs, p ascending.
inline std::vector<std::pair<int, int>> factorize(long long n) {
  std::vector<std::pair<int, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(static_cast<int>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<int>(n), 1);
  return out;
}

inline std::vector<int> prime_divisors(long long n) {
  std::vector<int> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Largest power of p dividing n.
inline long long p_part(long long n, int p) {
  long long q = 1;
  while (n % p == 0) { n /= p; q *= p; }
  return q;
}

// The part of n made of the given primes.
inline long long pi_part(long long n, const std::vector<int>& primes) {
  long long q = 1;
  for (int p : primes) q *= p_part(n, p);
  return q;
}

inline bool is_prime_power(long long n, int* base = nullptr) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (base) *base = f[0].first;
  return true;
}

}  // namespace grouplab
