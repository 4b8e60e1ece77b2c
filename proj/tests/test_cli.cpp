#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "twinsieve/cli.hpp"
#include "twinsieve/errors.hpp"

using namespace twinsieve;
using namespace twinsieve::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const CliConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("wheel command") {
  CliConfig c;
  c.command = Command::kWheel;
  c.max_level = 7;
  auto r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "L_7: period 210, 6 columns x 7 rows"));
  CHECK(contains(r.out, "headers: 11 13 17 19 29 31"));

  c.print_table = true;
  c.max_level = 5;
  r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, " [5]  (7)\n 11   13 \n"));

  c.table_format = TableFormat::kCsv;
  r = invoke(c);
  CHECK(contains(r.out, "row,column,value,mark\n"));
}

TEST_CASE("wheel command limits") {
  CliConfig c;
  c.command = Command::kWheel;
  c.max_level = 29;
  auto r = invoke(c);
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--wheel-cap"));
  c.max_level = 9;
  r = invoke(c);
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--max-level"));
  c.max_level = 13;
  c.wheel_cap = 11;
  CHECK(invoke(c).code == 2);
  c.wheel_cap = 4;
  c.max_level = 5;
  CHECK(invoke(c).code == 2);
}

TEST_CASE("count command") {
  CliConfig c;
  c.command = Command::kCount;
  c.p = 101;
  auto r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "count=404"));
  c.counting_mode = CountingMode::kPairs;
  CHECK(contains(invoke(c).out, "count=202"));
  c.counting_mode = CountingMode::kIndividual;
  c.p = 7;
  c.convention = IntervalConvention::kClosed;
  CHECK(contains(invoke(c).out, "count=9"));
  c.p = 100;
  r = invoke(c);
  CHECK(r.code == 2);
  CHECK(contains(r.err, "--p"));
}

TEST_CASE("estimate command") {
  CliConfig c;
  c.command = Command::kEstimate;
  c.p = 101;
  c.method = Method::kEq7;
  auto r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "pi(x)=1252"));
  CHECK(contains(r.out, "estimate=395 (half-away) unrounded=394.526974"));
  c.rounding = Rounding::kTruncate;
  CHECK(contains(invoke(c).out, "estimate=394 (truncate)"));
  c.rounding = Rounding::kHalfAwayFromZero;
  c.method = Method::kEq15;
  CHECK(contains(invoke(c).out, "estimate=406 "));
  c.counting_mode = CountingMode::kPairs;
  CHECK(contains(invoke(c).out, "unrounded=203.236458"));
  c.counting_mode = CountingMode::kIndividual;
  c.method = Method::kEq16;
  CHECK(invoke(c).code == 0);
  c.p = 4;
  CHECK(invoke(c).code == 2);
}

TEST_CASE("table and figure commands write files") {
  const fs::path dir = fs::temp_directory_path() / "twinsieve_cli_test";
  fs::remove_all(dir);
  CliConfig c;
  c.command = Command::kTable;
  c.primes = {101, 199};
  c.out_dir = dir;
  auto r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "101,404,395,1.03028,406,394.526974,"));
  CHECK(fs::exists(dir / "table4.csv"));
  CHECK(fs::exists(dir / "eq7.dat"));
  CHECK(fs::exists(dir / "eq15.dat"));

  c.command = Command::kFigure;
  r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# eq7\n101 "));
  CHECK(contains(r.out, "# eq15\n"));

  c.primes = {101, 221};
  r = invoke(c);
  CHECK(r.code == 2);
  CHECK(contains(r.err, "221"));
  fs::remove_all(dir);
}

TEST_CASE("ledger command") {
  CliConfig c;
  c.command = Command::kLedger;
  c.p = 11;
  auto r = invoke(c);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p_k,exact,eq5,eq5_rounded\n5,9,"));
  CHECK(contains(r.out, "survivors=16"));
  CHECK(contains(r.out, "deleted=12"));
}

TEST_CASE("default_out_dir") {
  ::unsetenv(kOutDirEnv);
  CHECK(default_out_dir() == fs::path("."));
  ::setenv(kOutDirEnv, "/tmp/somewhere", 1);
  CHECK(default_out_dir() == fs::path("/tmp/somewhere"));
  ::unsetenv(kOutDirEnv);
}

TEST_CASE("validate") {
  CliConfig c;
  c.command = Command::kTable;
  CHECK_NOTHROW(validate(c));
  c.command = Command::kLedger;
  CHECK_THROWS_AS(validate(c), ArgumentError);
}
