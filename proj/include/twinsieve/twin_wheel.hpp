// twin_wheel.hpp
// The double sieve on numbers 6n +/- 1. At each step the multiples of the
// sieving prime are deleted together with their designated twins
// (6n - 1 <-> 6n + 1), so twin pairs always live or die together.
//
// A wheel L_p is stored by its column headers: the surviving residues
// modulo base_period = (product of primes below p), written as
// representatives in the window [5, 5 + base_period). The table T_p is
// those headers continued over p rows (adding k * base_period), one full
// period of p# numbers.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinsieve/prime_core.hpp"
#include "twinsieve/rational.hpp"

namespace twinsieve {

// Largest level that advance() will materialize unless told otherwise.
// L_23 has 757,350 columns over a base period of 19# = 9,699,690.
inline constexpr std::uint64_t kDefaultWheelCap = 23;

struct WheelOptions {
  std::uint64_t max_level = kDefaultWheelCap;
};

// Designated twin: q + 2 for q = 6n - 1, q - 2 for q = 6n + 1.
// Throws ArgumentError if q is not of the form 6n +/- 1 with n >= 1.
std::uint64_t designated_twin(std::uint64_t q);

enum class DeletionMark {
  kKept,
  kMultiple,        // divisible by the wheel level
  kTwinOfMultiple,  // designated twin of such a multiple
};

class TwinWheel {
 public:
  // Sieving prime for the next step; L_p contains no number with a
  // prime factor below p (nor the twin of one).
  std::uint64_t level() const noexcept { return level_; }

  // Period of the table T_p, i.e. level#.
  std::uint64_t period() const noexcept { return base_period_ * level_; }

  // Modulus of the column headers, i.e. the product of primes below level.
  std::uint64_t base_period() const noexcept { return base_period_; }

  std::size_t column_count() const noexcept { return headers_.size(); }
  std::size_t row_count() const noexcept { return static_cast<std::size_t>(level_); }

  // Sorted column headers in [5, 5 + base_period).
  std::span<const std::uint64_t> headers() const noexcept { return headers_; }

  // Every entry of T_p, sorted, in [5, 5 + period).
  std::vector<std::uint64_t> residues() const;

  // Twin of a header (or table entry); always another member of the same
  // window. Throws ArgumentError if r is not a residue of this wheel.
  std::uint64_t twin_of(std::uint64_t r) const;

  bool contains(std::uint64_t n) const noexcept;

  // Fraction of integers that are members of L_p, as column_count / base_period.
  Rational density() const;

  // Annotation of a T_p entry for the step that builds the next wheel.
  DeletionMark mark(std::uint64_t entry) const noexcept;

 private:
  friend TwinWheel initial_wheel();
  friend TwinWheel advance(const TwinWheel& wheel, const WheelOptions& options);

  TwinWheel(std::uint64_t level, std::uint64_t base_period, std::vector<std::uint64_t> headers)
      : level_(level), base_period_(base_period), headers_(std::move(headers)) {}

  std::uint64_t level_;
  std::uint64_t base_period_;
  std::vector<std::uint64_t> headers_;
};

// L_5: every 6n +/- 1, laid out as T_5 = {5, 7, 11, ..., 29, 31}.
TwinWheel initial_wheel();

// L_p -> L_{next prime}: delete the multiples of p and their twins from
// T_p; the survivors become the headers of the next wheel. Throws
// ResourceError when the next level would exceed options.max_level.
TwinWheel advance(const TwinWheel& wheel, const WheelOptions& options = {});

// Advances from L_5 until the wheel's level equals `level` (a prime >= 5).
TwinWheel build_wheel(std::uint64_t level, const WheelOptions& options = {});

// Members of L_p below bound, ascending.
std::vector<std::uint64_t> wheel_members_below(const TwinWheel& wheel, std::uint64_t bound);

// Sieving prime at which the prime q >= 5 leaves the wheel, or nullopt if q
// is still present in L_{max_level}. A pair dies at the smallest prime
// factor >= 5 of either member, so the step is min(q, spf(twin(q))).
// Throws ArgumentError for composite q, q < 5, or non-prime max_level.
std::optional<std::uint64_t> deletion_step_of(std::uint64_t q, std::uint64_t max_level);

struct LedgerStep {
  std::uint64_t prime;
  std::uint64_t deleted;
  friend bool operator==(const LedgerStep&, const LedgerStep&) = default;
};

struct DeletionLedger {
  std::uint64_t bound = 0;  // exclusive, p^2
  std::vector<LedgerStep> steps;
  std::uint64_t survivors = 0;

  std::uint64_t total_deleted() const noexcept;
};

// Exact N_p(p_k) for 5 <= p_k < p over primes below p^2. Requires
// table.limit() >= p^2.
DeletionLedger exact_deletion_ledger(std::uint64_t p, const PrimeTable& table);

enum class TableFormat { kText, kCsv };

// Writes T_p as level rows by column_count columns. Text marks multiples
// of the level as [n] and their twins as (n); CSV emits
// "row,column,value,mark" records.
void render_table(const TwinWheel& wheel, TableFormat format, std::ostream& out);
std::string render_table(const TwinWheel& wheel, TableFormat format);

const char* to_string(DeletionMark mark) noexcept;

}  // namespace twinsieve
