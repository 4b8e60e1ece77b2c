// experiments.hpp
// Table of actual versus estimated twin-prime counts on [p, p^2], the
// percent-difference series derived from it, and their file exports.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twinsieve/prime_core.hpp"

namespace twinsieve {

enum class CountingMode { kIndividual, kPairs };

// Which twin-prime members count as lying "between p and p^2".
enum class IntervalConvention {
  // Members q >= 5 of every twin pair that meets [p, p^2]; this admits p - 2
  // when (p - 2, p) is a pair. Reproduces the published actual counts.
  kPairsMeetingInterval,
  // Members q in [p, p^2].
  kClosed,
  // Members q in [p, p^2 - 2].
  kBelowSquareMinusTwo,
};

enum class Rounding { kHalfAwayFromZero, kTruncate };

struct CountOptions {
  CountingMode mode = CountingMode::kIndividual;
  IntervalConvention convention = IntervalConvention::kPairsMeetingInterval;
};

// Twin-prime count for p. Requires a prime p >= 5 and table.limit() >= p^2 + 2.
// In pair mode, counts pairs instead of members.
std::uint64_t count_actual_twins(std::uint64_t p, const PrimeTable& table,
                                 const CountOptions& options = {});

struct EstimateRow {
  std::uint64_t p = 0;
  std::uint64_t actual = 0;
  std::uint64_t pi_p2 = 0;
  double eq7 = 0.0;
  double r = 0.0;
  double eq15 = 0.0;
};

struct ReportMetadata {
  std::string generated_at;  // ISO-8601 UTC; never written into exports
  std::uint64_t sieve_limit = 0;
  Rounding rounding = Rounding::kHalfAwayFromZero;
};

struct TableReport {
  std::vector<EstimateRow> rows;
  ReportMetadata metadata;
};

// The seventeen primes of the published table, 101 through 8009.
std::vector<std::uint64_t> table4_primes();

// One row per listed prime. Throws ArgumentError naming the first entry
// that is composite or below 5, and RangeError if the table is too small.
TableReport build_table4(std::span<const std::uint64_t> primes, const PrimeTable& table,
                         Rounding rounding = Rounding::kHalfAwayFromZero,
                         const CountOptions& options = {});

// Display rounding of a count estimate.
std::int64_t round_count(double value, Rounding rounding);

// r rounded half-up to 5 decimals.
double round_r(double r);

struct FigurePoint {
  std::uint64_t p = 0;
  double pct_diff = 0.0;
};

struct FigureSeries {
  std::string label;  // "eq7" or "eq15"
  std::vector<FigurePoint> points;
};

// 100 (estimate - actual) / actual from unrounded estimates, ascending in p.
// Throws ComputationError if some row has actual == 0.
std::pair<FigureSeries, FigureSeries> figure1_series(const TableReport& report);

// Writes table4.csv, eq7.dat and eq15.dat into out_dir (created if needed)
// and returns the written paths. Output depends only on the rows.
std::vector<std::filesystem::path> export_report(const TableReport& report,
                                                 const std::pair<FigureSeries, FigureSeries>& series,
                                                 const std::filesystem::path& out_dir);

// The individual pieces of export_report, for streaming.
std::string format_table_csv(const TableReport& report);
std::string format_series_dat(const FigureSeries& series);

const char* to_string(Rounding rounding) noexcept;
const char* to_string(IntervalConvention convention) noexcept;

}  // namespace twinsieve
