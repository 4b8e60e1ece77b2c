// twinsieve: command-line front end for the double sieve, the twin-prime
// count estimates and the table/figure reproduction.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "twinsieve/cli.hpp"

using twinsieve::cli::CliConfig;
using twinsieve::cli::Command;
using twinsieve::cli::Method;

int main(int argc, char** argv) {
  CLI::App app{"Double sieve for twin primes and twin-prime count estimates"};
  app.require_subcommand(1);

  CliConfig config;
  config.out_dir = twinsieve::cli::default_out_dir();

  const std::map<std::string, twinsieve::CountingMode> counting{
      {"individual", twinsieve::CountingMode::kIndividual},
      {"pairs", twinsieve::CountingMode::kPairs}};
  const std::map<std::string, twinsieve::Rounding> rounding{
      {"half-away", twinsieve::Rounding::kHalfAwayFromZero},
      {"truncate", twinsieve::Rounding::kTruncate}};
  const std::map<std::string, twinsieve::IntervalConvention> conventions{
      {"pairs-meeting", twinsieve::IntervalConvention::kPairsMeetingInterval},
      {"closed", twinsieve::IntervalConvention::kClosed},
      {"below-square-minus-two", twinsieve::IntervalConvention::kBelowSquareMinusTwo}};
  const std::map<std::string, Method> methods{
      {"eq7", Method::kEq7}, {"eq15", Method::kEq15}, {"eq16", Method::kEq16}};
  const std::map<std::string, twinsieve::TableFormat> formats{
      {"text", twinsieve::TableFormat::kText}, {"csv", twinsieve::TableFormat::kCsv}};

  app.add_option("--counting", config.counting_mode, "Count individual members or pairs")
      ->transform(CLI::CheckedTransformer(counting, CLI::ignore_case));
  app.add_option("--rounding", config.rounding, "Display rounding for count estimates")
      ->transform(CLI::CheckedTransformer(rounding, CLI::ignore_case));
  app.add_option("--convention", config.convention, "Which twin members count as inside [p, p^2]")
      ->transform(CLI::CheckedTransformer(conventions, CLI::ignore_case));
  app.add_option("--wheel-cap", config.wheel_cap, "Largest wheel level to materialize");
  app.add_option("--out-dir", config.out_dir,
                 std::string("Output directory (default $") + twinsieve::cli::kOutDirEnv + " or .)");

  auto* wheel = app.add_subcommand("wheel", "Build L_p and print T_p with deletion marks");
  wheel->add_option("--max-level", config.max_level, "Wheel level (prime >= 5)")->required();
  wheel->add_flag("--print-table", config.print_table, "Print the full table T_p");
  wheel->add_option("--format", config.table_format, "Table format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto* count = app.add_subcommand("count", "Count twin primes between p and p^2");
  count->add_option("--p", config.p, "Prime p >= 5")->required();

  auto* estimate = app.add_subcommand("estimate", "Evaluate one estimate of the twin count");
  estimate->add_option("--p", config.p, "Prime p >= 5")->required();
  estimate->add_option("--method", config.method, "eq7, eq15 or eq16")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));

  auto* table = app.add_subcommand("table", "Write and print table4.csv");
  table->add_option("--primes", config.primes, "Primes to tabulate (default: the 17-row set)")
      ->delimiter(',');

  auto* figure = app.add_subcommand("figure", "Write eq7.dat and eq15.dat");
  figure->add_option("--primes", config.primes, "Primes to tabulate (default: the 17-row set)")
      ->delimiter(',');

  auto* ledger = app.add_subcommand("ledger", "Exact versus estimated deletions per sieve step");
  ledger->add_option("--p", config.p, "Prime p >= 5")->required();

  CLI11_PARSE(app, argc, argv);

  if (wheel->parsed()) config.command = Command::kWheel;
  if (count->parsed()) config.command = Command::kCount;
  if (estimate->parsed()) config.command = Command::kEstimate;
  if (table->parsed()) config.command = Command::kTable;
  if (figure->parsed()) config.command = Command::kFigure;
  if (ledger->parsed()) config.command = Command::kLedger;

  return twinsieve::cli::run(config, std::cout, std::cerr);
}
