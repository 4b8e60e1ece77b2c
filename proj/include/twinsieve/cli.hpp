#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "twinsieve/experiments.hpp"
#include "twinsieve/twin_wheel.hpp"

namespace twinsieve::cli {

enum class Command { kWheel, kCount, kEstimate, kTable, kFigure, kLedger };
enum class Method { kEq7, kEq15, kEq16 };

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "TWINSIEVE_OUT_DIR";

struct CliConfig {
  Command command = Command::kTable;
  std::uint64_t p = 0;
  std::uint64_t max_level = 7;
  bool print_table = false;
  TableFormat table_format = TableFormat::kText;
  Method method = Method::kEq15;
  std::vector<std::uint64_t> primes;  // empty: the default seventeen
  std::filesystem::path out_dir = ".";
  CountingMode counting_mode = CountingMode::kIndividual;
  IntervalConvention convention = IntervalConvention::kPairsMeetingInterval;
  Rounding rounding = Rounding::kHalfAwayFromZero;
  std::uint64_t wheel_cap = kDefaultWheelCap;
};

// Checks cross-field constraints; throws ArgumentError with an actionable
// one-line message.
void validate(const CliConfig& config);

// Runs one command. Returns the process exit status; diagnostics go to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Default output directory: $TWINSIEVE_OUT_DIR, else ".".
std::filesystem::path default_out_dir();

}  // namespace twinsieve::cli
