#include "twinsieve/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "twinsieve/errors.hpp"
#include "twinsieve/estimators.hpp"

namespace twinsieve::cli {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void require_p(const CliConfig& c) {
  if (c.p < 5 || !is_prime_trial(c.p))
    throw ArgumentError("--p must be a prime >= 5 (got " + std::to_string(c.p) + ")");
}

std::vector<std::uint64_t> requested_primes(const CliConfig& c) {
  return c.primes.empty() ? table4_primes() : c.primes;
}

PrimeTable table_for(std::uint64_t max_p) { return sieve_primes(max_p * max_p + 2); }

int run_wheel(const CliConfig& c, std::ostream& out) {
  const TwinWheel wheel = build_wheel(c.max_level, WheelOptions{c.wheel_cap});
  out << "L_" << wheel.level() << ": period " << wheel.period() << ", " << wheel.column_count()
      << " columns x " << wheel.row_count() << " rows, density " << wheel.density() << '\n';
  if (c.print_table) {
    render_table(wheel, c.table_format, out);
  } else {
    out << "headers:";
    for (std::uint64_t h : wheel.headers()) out << ' ' << h;
    out << '\n';
  }
  return 0;
}

int run_count(const CliConfig& c, std::ostream& out) {
  require_p(c);
  const PrimeTable table = table_for(c.p);
  const CountOptions opts{c.counting_mode, c.convention};
  out << "p=" << c.p << " interval=[" << c.p << "," << c.p * c.p << "] convention="
      << to_string(c.convention)
      << " mode=" << (c.counting_mode == CountingMode::kPairs ? "pairs" : "individual")
      << " count=" << count_actual_twins(c.p, table, opts) << '\n';
  return 0;
}

int run_estimate(const CliConfig& c, std::ostream& out) {
  require_p(c);
  const std::uint64_t x = c.p * c.p;
  const PrimeTable table = table_for(c.p);
  const std::uint64_t pi_x = table.count_primes_up_to(x);
  const double scale = c.counting_mode == CountingMode::kPairs ? 0.5 : 1.0;
  double value = 0.0;
  const char* name = "eq15";
  switch (c.method) {
    case Method::kEq7:
      name = "eq7";
      value = estimate_eq7(c.p, pi_x);
      break;
    case Method::kEq15:
      value = estimate_eq15(c.p, pi_x);
      break;
    case Method::kEq16:
      name = "eq16";
      value = asymptotic_eq16(static_cast<double>(x), c.p);
      break;
  }
  value *= scale;
  out << "method=" << name << " p=" << c.p << " x=" << x << " pi(x)=" << pi_x
      << " r=" << fixed(correction_r(c.p, pi_x), 10) << '\n';
  out << "estimate=" << round_count(value, c.rounding) << " (" << to_string(c.rounding)
      << ") unrounded=" << fixed(value, 6) << '\n';
  return 0;
}

TableReport make_report(const CliConfig& c) {
  const auto primes = requested_primes(c);
  for (std::uint64_t p : primes)
    if (p < 5 || !is_prime_trial(p))
      throw ArgumentError("--primes entry " + std::to_string(p) + " is not a prime >= 5");
  const std::uint64_t max_p = *std::max_element(primes.begin(), primes.end());
  const PrimeTable table = table_for(max_p);
  return build_table4(primes, table, c.rounding, CountOptions{c.counting_mode, c.convention});
}

int run_table(const CliConfig& c, std::ostream& out) {
  const TableReport report = make_report(c);
  const auto series = figure1_series(report);
  const auto files = export_report(report, series, c.out_dir);
  out << "p,actual,eq7,r,eq15,eq7_unrounded,r_unrounded,eq15_unrounded\n";
  for (const EstimateRow& row : report.rows) {
    out << row.p << ',' << row.actual << ',' << round_count(row.eq7, c.rounding) << ','
        << fixed(round_r(row.r), 5) << ',' << round_count(row.eq15, c.rounding) << ','
        << fixed(row.eq7, 6) << ',' << fixed(row.r, 10) << ',' << fixed(row.eq15, 6) << '\n';
  }
  out << "wrote " << files.front().string() << '\n';
  return 0;
}

int run_figure(const CliConfig& c, std::ostream& out) {
  const TableReport report = make_report(c);
  const auto series = figure1_series(report);
  const auto files = export_report(report, series, c.out_dir);
  for (const auto& s : {series.first, series.second}) {
    out << "# " << s.label << '\n' << format_series_dat(s);
  }
  for (std::size_t i = 1; i < files.size(); ++i) out << "wrote " << files[i].string() << '\n';
  return 0;
}

int run_ledger(const CliConfig& c, std::ostream& out) {
  require_p(c);
  const PrimeTable table = table_for(c.p);
  const std::uint64_t pi_x = table.count_primes_up_to(c.p * c.p);
  const DeletionLedger ledger = exact_deletion_ledger(c.p, table);
  out << "p_k,exact,eq5,eq5_rounded\n";
  for (const LedgerStep& step : ledger.steps) {
    const double est = deleted_estimate_eq5(c.p, step.prime, pi_x);
    out << step.prime << ',' << step.deleted << ',' << fixed(est, 6) << ','
        << round_count(est, c.rounding) << '\n';
  }
  out << "deleted=" << ledger.total_deleted() << " survivors=" << ledger.survivors
      << " pi(p^2)-2=" << pi_x - 2 << " eq6=" << fixed(telescoping_total_eq6(c.p, pi_x), 6)
      << " eq7=" << fixed(estimate_eq7(c.p, pi_x), 6) << '\n';
  return 0;
}

}  // namespace

void validate(const CliConfig& c) {
  if (c.wheel_cap < 5) throw ArgumentError("--wheel-cap must be at least 5");
  if (c.command == Command::kWheel) {
    if (c.max_level < 5 || !is_prime_trial(c.max_level))
      throw ArgumentError("--max-level must be a prime >= 5 (got " + std::to_string(c.max_level) +
                          ")");
    if (c.max_level > c.wheel_cap)
      throw ArgumentError("--max-level " + std::to_string(c.max_level) +
                          " exceeds --wheel-cap " + std::to_string(c.wheel_cap) +
                          "; raise --wheel-cap to materialize it");
  }
  if (c.command == Command::kCount || c.command == Command::kEstimate ||
      c.command == Command::kLedger)
    require_p(c);
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::kWheel:
        return run_wheel(config, out);
      case Command::kCount:
        return run_count(config, out);
      case Command::kEstimate:
        return run_estimate(config, out);
      case Command::kTable:
        return run_table(config, out);
      case Command::kFigure:
        return run_figure(config, out);
      case Command::kLedger:
        return run_ledger(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

}  // namespace twinsieve::cli
