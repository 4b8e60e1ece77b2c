#include "twinsieve/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <system_error>

#include "twinsieve/errors.hpp"
#include "twinsieve/estimators.hpp"

namespace twinsieve {

namespace {

struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

Range counted_range(std::uint64_t p, IntervalConvention convention) {
  const std::uint64_t sq = p * p;
  switch (convention) {
    case IntervalConvention::kPairsMeetingInterval:
      return {std::max<std::uint64_t>(5, p - 2), sq};
    case IntervalConvention::kClosed:
      return {std::max<std::uint64_t>(5, p), sq};
    case IntervalConvention::kBelowSquareMinusTwo:
      return {std::max<std::uint64_t>(5, p), sq - 2};
  }
  return {p, sq};
}

void require_table_prime(std::uint64_t p, const char* fn) {
  if (p < 5 || !is_prime_trial(p))
    throw ArgumentError(std::string(fn) + ": " + std::to_string(p) + " is not a prime >= 5");
}

std::string utc_now_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  out << contents;
  out.flush();
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
}

}  // namespace

std::uint64_t count_actual_twins(std::uint64_t p, const PrimeTable& table,
                                 const CountOptions& options) {
  require_table_prime(p, "count_actual_twins");
  const std::uint64_t need = p * p + 2;
  if (table.limit() < need)
    throw RangeError("count_actual_twins: table limit " + std::to_string(table.limit()) +
                     " is below p^2 + 2 = " + std::to_string(need));

  const Range range = counted_range(p, options.convention);
  std::uint64_t count = 0;
  if (options.mode == CountingMode::kIndividual) {
    for (std::uint64_t q = range.lo | 1; q <= range.hi; q += 2) {
      if (table.is_prime(q) && (table.is_prime(q - 2) || table.is_prime(q + 2))) ++count;
    }
    return count;
  }
  // Pairs (a, a + 2) with at least one member inside the range.
  const std::uint64_t first = std::max<std::uint64_t>(5, range.lo - 2) | 1;
  for (std::uint64_t a = first; a <= range.hi; a += 2) {
    if (!table.is_prime(a) || !table.is_prime(a + 2)) continue;
    const bool in_lo = a >= range.lo;
    const bool in_hi = a + 2 <= range.hi;
    if (in_lo || in_hi) ++count;
  }
  return count;
}

std::vector<std::uint64_t> table4_primes() {
  return {101, 199, 307, 401, 503, 601, 701, 797, 907, 1009, 1999, 3001, 4001, 5003, 6007, 7001, 8009};
}

TableReport build_table4(std::span<const std::uint64_t> primes, const PrimeTable& table,
                         Rounding rounding, const CountOptions& options) {
  for (std::uint64_t p : primes) {
    if (p < 5 || !is_prime_trial(p))
      throw ArgumentError("build_table4: " + std::to_string(p) + " is not a prime >= 5");
  }
  TableReport report;
  report.metadata.generated_at = utc_now_iso8601();
  report.metadata.sieve_limit = table.limit();
  report.metadata.rounding = rounding;
  report.rows.reserve(primes.size());
  for (std::uint64_t p : primes) {
    EstimateRow row;
    row.p = p;
    row.actual = count_actual_twins(p, table, options);
    row.pi_p2 = table.count_primes_up_to(p * p);
    row.eq7 = estimate_eq7(p, row.pi_p2);
    row.r = correction_r(p, row.pi_p2);
    row.eq15 = estimate_eq15(p, row.pi_p2);
    report.rows.push_back(row);
  }
  return report;
}

std::int64_t round_count(double value, Rounding rounding) {
  return static_cast<std::int64_t>(rounding == Rounding::kTruncate ? std::trunc(value)
                                                                   : std::round(value));
}

double round_r(double r) { return std::floor(r * 1e5 + 0.5) / 1e5; }

std::pair<FigureSeries, FigureSeries> figure1_series(const TableReport& report) {
  std::vector<EstimateRow> rows = report.rows;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const EstimateRow& a, const EstimateRow& b) { return a.p < b.p; });
  FigureSeries eq7{"eq7", {}};
  FigureSeries eq15{"eq15", {}};
  for (const EstimateRow& row : rows) {
    if (row.actual == 0)
      throw ComputationError("figure1_series: actual count is zero for p = " +
                             std::to_string(row.p));
    const double actual = static_cast<double>(row.actual);
    eq7.points.push_back({row.p, 100.0 * (row.eq7 - actual) / actual});
    eq15.points.push_back({row.p, 100.0 * (row.eq15 - actual) / actual});
  }
  return {std::move(eq7), std::move(eq15)};
}

std::string format_table_csv(const TableReport& report) {
  std::string out = "p,actual,eq7,r,eq15\n";
  char buf[160];
  for (const EstimateRow& row : report.rows) {
    std::snprintf(buf, sizeof buf, "%llu,%llu,%lld,%.5f,%lld\n",
                  static_cast<unsigned long long>(row.p),
                  static_cast<unsigned long long>(row.actual),
                  static_cast<long long>(round_count(row.eq7, report.metadata.rounding)),
                  round_r(row.r),
                  static_cast<long long>(round_count(row.eq15, report.metadata.rounding)));
    out += buf;
  }
  return out;
}

std::string format_series_dat(const FigureSeries& series) {
  std::string out;
  char buf[96];
  for (const FigurePoint& pt : series.points) {
    std::snprintf(buf, sizeof buf, "%llu %.6g\n", static_cast<unsigned long long>(pt.p),
                  pt.pct_diff);
    out += buf;
  }
  return out;
}

std::vector<std::filesystem::path> export_report(const TableReport& report,
                                                 const std::pair<FigureSeries, FigureSeries>& series,
                                                 const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::system_error(ec, "cannot create " + out_dir.string());

  std::vector<std::filesystem::path> written;
  const auto emit = [&](const char* name, const std::string& contents) {
    const auto path = out_dir / name;
    write_file(path, contents);
    written.push_back(path);
  };
  emit("table4.csv", format_table_csv(report));
  emit("eq7.dat", format_series_dat(series.first));
  emit("eq15.dat", format_series_dat(series.second));
  return written;
}

const char* to_string(Rounding rounding) noexcept {
  return rounding == Rounding::kTruncate ? "truncate" : "half-away";
}

const char* to_string(IntervalConvention convention) noexcept {
  switch (convention) {
    case IntervalConvention::kPairsMeetingInterval:
      return "pairs-meeting";
    case IntervalConvention::kClosed:
      return "closed";
    case IntervalConvention::kBelowSquareMinusTwo:
      return "below-square-minus-two";
  }
  return "pairs-meeting";
}

}  // namespace twinsieve
