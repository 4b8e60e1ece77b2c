// Reference implementations used only by the tests. Nothing here calls into
// the library; each routine is the plainest possible statement of its
// definition.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Byte-per-number sieve of Eratosthenes over [0, n].
inline std::vector<char> byte_sieve(std::uint64_t n) {
  std::vector<char> s(n + 1, 1);
  s[0] = 0;
  if (n >= 1) s[1] = 0;
  for (std::uint64_t i = 2; i * i <= n; ++i)
    if (s[i])
      for (std::uint64_t j = i * i; j <= n; j += i) s[j] = 0;
  return s;
}

// Primes q in [lo, hi) such that q - 2 or q + 2 is prime.
inline std::set<std::uint64_t> twin_primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::set<std::uint64_t> out;
  for (std::uint64_t q = lo; q < hi; ++q)
    if (is_prime(q) && ((q >= 2 && is_prime(q - 2)) || is_prime(q + 2))) out.insert(q);
  return out;
}

}  // namespace oracle
