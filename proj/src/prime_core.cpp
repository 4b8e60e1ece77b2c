#include "twinsieve/prime_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<char> composite(bound + 1, 0);
  for (std::uint64_t i = 2; i * i <= bound; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
  for (std::uint64_t i = 2; i <= bound; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

bool is_prime_trial(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2)
    throw RangeError("sieve_primes: limit must be at least 2, got " + std::to_string(limit));
  if (limit > options.cap)
    throw RangeError("sieve_primes: limit " + std::to_string(limit) + " exceeds cap " +
                     std::to_string(options.cap));
  if (options.segment_size == 0) throw ArgumentError("sieve_primes: segment_size must be positive");

  PrimeTable table;
  table.limit_ = limit;
  table.segment_size_ = options.segment_size;

  // Odd numbers 1, 3, ..., up to limit -> bits [0, nbits).
  const std::uint64_t nbits = (limit + 1) / 2;
  const std::uint64_t nwords = (nbits + 63) / 64;
  table.words_.assign(nwords, ~std::uint64_t{0});
  if (nbits % 64) table.words_.back() = (std::uint64_t{1} << (nbits % 64)) - 1;
  table.words_[0] &= ~std::uint64_t{1};  // 1 is not prime

  const std::uint64_t root = isqrt(limit);
  std::vector<std::uint64_t> base;
  for (std::uint64_t p : primes_up_to(root))
    if (p != 2) base.push_back(p);

  // next_[j] is the next odd multiple of base[j] still to be crossed off,
  // expressed as a bit index. Starts at p*p.
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) next[j] = (base[j] * base[j]) >> 1;

  // A segment of S numbers covers about S/2 bits; at least one bit per segment.
  const std::uint64_t seg_bits = std::max<std::uint64_t>(1, options.segment_size / 2);
  auto& words = table.words_;
  for (std::uint64_t lo = 0; lo < nbits; lo += seg_bits) {
    const std::uint64_t hi = std::min(nbits, lo + seg_bits);
    for (std::size_t j = 0; j < base.size(); ++j) {
      const std::uint64_t p = base[j];
      std::uint64_t i = next[j];
      for (; i < hi; i += p) words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
      next[j] = i;
    }
  }

  table.rank_.resize(nwords + 1);
  table.rank_[0] = 0;
  for (std::uint64_t w = 0; w < nwords; ++w)
    table.rank_[w + 1] = table.rank_[w] + static_cast<std::uint64_t>(std::popcount(words[w]));
  return table;
}

bool PrimeTable::is_prime(std::uint64_t q) const {
  if (q > limit_)
    throw RangeError("is_prime: " + std::to_string(q) + " exceeds table limit " +
                     std::to_string(limit_));
  if (q % 2 == 0) return q == 2;
  return odd_bit(q);
}

std::uint64_t PrimeTable::count_primes_up_to(std::uint64_t x) const {
  if (x > limit_)
    throw RangeError("count_primes_up_to: " + std::to_string(x) + " exceeds table limit " +
                     std::to_string(limit_));
  if (x < 2) return 0;
  // Odd primes <= x live in bits [0, (x - 1) / 2].
  const std::uint64_t last = (x - 1) >> 1;
  const std::uint64_t w = last >> 6;
  const std::uint64_t b = last & 63;
  const std::uint64_t mask = b == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1);
  return 1 + rank_[w] + static_cast<std::uint64_t>(std::popcount(words_[w] & mask));
}

std::vector<std::uint64_t> PrimeTable::primes_between(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  hi = std::min(hi, limit_);
  if (lo > hi) return out;
  if (lo <= 2 && hi >= 2) out.push_back(2);
  std::uint64_t n = std::max<std::uint64_t>(lo, 3) | 1;
  for (; n <= hi; n += 2)
    if (odd_bit(n)) out.push_back(n);
  return out;
}

std::uint64_t count_primes_up_to(const PrimeTable& table, std::uint64_t x) {
  return table.count_primes_up_to(x);
}

PrimeSeq::PrimeSeq(std::uint64_t bound) : bound_(bound), primes_(primes_up_to(bound)) {}

std::uint64_t PrimeSeq::at(std::size_t n) const {
  if (n == 0 || n > primes_.size())
    throw RangeError("PrimeSeq::at: index " + std::to_string(n) + " outside [1, " +
                     std::to_string(primes_.size()) + "]");
  return primes_[n - 1];
}

std::size_t PrimeSeq::index_of(std::uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p)
    throw ArgumentError("PrimeSeq::index_of: " + std::to_string(p) + " is not a prime <= " +
                        std::to_string(bound_));
  return static_cast<std::size_t>(it - primes_.begin()) + 1;
}

std::span<const std::uint64_t> PrimeSeq::up_to(std::uint64_t p) const {
  auto it = std::upper_bound(primes_.begin(), primes_.end(), p);
  return {primes_.data(), static_cast<std::size_t>(it - primes_.begin())};
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw ArgumentError("nth_prime: n must be at least 1");
  // p_n < n (ln n + ln ln n) for n >= 6.
  std::uint64_t bound = 15;
  if (n >= 6) {
    const double dn = static_cast<double>(n);
    bound = static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 3;
  }
  const PrimeTable table = sieve_primes(bound);
  std::uint64_t seen = 0;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (table.is_prime(q) && ++seen == n) return q;
  }
  throw RangeError("nth_prime: bound estimate too small");  // unreachable
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t q = n + 1;
  while (!is_prime_trial(q)) ++q;
  return q;
}

std::uint64_t primorial(std::uint64_t p) {
  if (!is_prime_trial(p)) throw ArgumentError("primorial: " + std::to_string(p) + " is not prime");
  std::uint64_t acc = 1;
  for (std::uint64_t q : primes_up_to(p)) {
    if (mul_overflows(acc, q, acc))
      throw RangeError("primorial: " + std::to_string(p) + "# does not fit in 64 bits");
  }
  return acc;
}

std::uint64_t phi_primorial(std::uint64_t p) {
  if (!is_prime_trial(p))
    throw ArgumentError("phi_primorial: " + std::to_string(p) + " is not prime");
  std::uint64_t acc = 1;
  for (std::uint64_t q : primes_up_to(p)) {
    if (mul_overflows(acc, q - 1, acc))
      throw RangeError("phi_primorial: phi(" + std::to_string(p) + "#) does not fit in 64 bits");
  }
  return acc;
}

}  // namespace twinsieve
