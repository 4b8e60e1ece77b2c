// prime_core.hpp
// Exact primality infrastructure: a segmented odd-only sieve with O(1)
// prime counting, plus the small closed-form helpers (n-th prime,
// primorials, Euler phi of primorials) the rest of the library builds on.
//
// Encoding of the bitmap:
//   bit index i   ->  odd number 2*i + 1
//   odd number n  ->  bit index (n - 1) / 2
// The number 2 is answered specially; every other even number is composite.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace twinsieve {

inline constexpr std::uint64_t kDefaultSieveCap = std::uint64_t{1} << 40;
// Numbers per segment. 2^21 numbers = 2^20 odd bits = 128 KiB of bitmap.
inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 21;

struct SieveOptions {
  std::uint64_t segment_size = kDefaultSegmentSize;
  std::uint64_t cap = kDefaultSieveCap;
};

// Immutable primality map over [0, limit]. All queries are const and safe
// to call concurrently once the table has been built.
class PrimeTable {
 public:
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t segment_size() const noexcept { return segment_size_; }

  // Throws RangeError for q > limit().
  bool is_prime(std::uint64_t q) const;

  // pi(x). Throws RangeError for x > limit().
  std::uint64_t count_primes_up_to(std::uint64_t x) const;

  // Primes in [lo, hi], ascending. hi is clamped to limit().
  std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) const;

  // Raw bitmap words (bit i of word w is the odd number 2*(64*w + i) + 1).
  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  friend PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options);

  bool odd_bit(std::uint64_t n) const noexcept {
    const std::uint64_t i = n >> 1;
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  std::uint64_t limit_ = 0;
  std::uint64_t segment_size_ = 0;
  std::vector<std::uint64_t> words_;
  // rank_[w] = number of set bits in words_[0, w).
  std::vector<std::uint64_t> rank_;
};

// Sieve of Eratosthenes over [0, limit], processed segment by segment.
// Requires 2 <= limit <= options.cap; throws RangeError otherwise.
PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options = {});

// Free-function form of PrimeTable::count_primes_up_to.
std::uint64_t count_primes_up_to(const PrimeTable& table, std::uint64_t x);

// The ascending primes p_1 = 2, p_2 = 3, ... up to a bound.
class PrimeSeq {
 public:
  explicit PrimeSeq(std::uint64_t bound);

  std::size_t size() const noexcept { return primes_.size(); }
  std::uint64_t bound() const noexcept { return bound_; }

  // 1-based: at(1) == 2. Throws RangeError past the stored range.
  std::uint64_t at(std::size_t n) const;

  // n with p_n == p. Throws ArgumentError if p is not a stored prime.
  std::size_t index_of(std::uint64_t p) const;

  // p_1 .. p_k where p_k <= p.
  std::span<const std::uint64_t> up_to(std::uint64_t p) const;

  std::span<const std::uint64_t> all() const noexcept { return primes_; }

 private:
  std::uint64_t bound_;
  std::vector<std::uint64_t> primes_;
};

// All primes <= bound (simple unsegmented sieve; meant for small bounds).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Deterministic trial division. Used for argument validation.
bool is_prime_trial(std::uint64_t n) noexcept;

// p_n, n >= 1. Throws ArgumentError for n == 0.
std::uint64_t nth_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

// p# = product of primes <= p. Throws ArgumentError for composite p and
// RangeError when the product does not fit in 64 bits.
std::uint64_t primorial(std::uint64_t p);

// phi(p#) = product over primes q <= p of (q - 1).
std::uint64_t phi_primorial(std::uint64_t p);

}  // namespace twinsieve
