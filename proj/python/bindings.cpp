#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "twinsieve/errors.hpp"
#include "twinsieve/estimators.hpp"
#include "twinsieve/experiments.hpp"
#include "twinsieve/prime_core.hpp"
#include "twinsieve/twin_wheel.hpp"

namespace py = pybind11;
using namespace twinsieve;

namespace {

// Exact rationals cross the boundary as (numerator, denominator) decimal strings.
py::tuple rational_parts(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q).str();
  const auto den = boost::multiprecision::denominator(q).str();
  return py::make_tuple(num, den);
}

}  // namespace

PYBIND11_MODULE(_twinsieve, m) {
  m.doc() = "Double sieve for twin primes and twin-prime count estimates";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);

  // prime_core
  py::class_<PrimeTable>(m, "PrimeTable")
      .def_property_readonly("limit", &PrimeTable::limit)
      .def_property_readonly("segment_size", &PrimeTable::segment_size)
      .def("is_prime", &PrimeTable::is_prime, py::arg("q"))
      .def("count_primes_up_to", &PrimeTable::count_primes_up_to, py::arg("x"))
      .def("primes_between", &PrimeTable::primes_between, py::arg("lo"), py::arg("hi"));

  m.def(
      "sieve_primes",
      [](std::uint64_t limit, std::uint64_t segment_size) {
        py::gil_scoped_release release;
        return sieve_primes(limit, SieveOptions{segment_size, kDefaultSieveCap});
      },
      py::arg("limit"), py::arg("segment_size") = kDefaultSegmentSize);
  m.def("nth_prime", &nth_prime, py::arg("n"));
  m.def("primorial", &primorial, py::arg("p"));
  m.def("phi_primorial", &phi_primorial, py::arg("p"));

  // twin_wheel
  py::enum_<DeletionMark>(m, "DeletionMark")
      .value("KEPT", DeletionMark::kKept)
      .value("MULTIPLE", DeletionMark::kMultiple)
      .value("TWIN_OF_MULTIPLE", DeletionMark::kTwinOfMultiple);

  py::class_<TwinWheel>(m, "TwinWheel")
      .def_property_readonly("level", &TwinWheel::level)
      .def_property_readonly("period", &TwinWheel::period)
      .def_property_readonly("base_period", &TwinWheel::base_period)
      .def_property_readonly("headers",
                             [](const TwinWheel& w) {
                               return std::vector<std::uint64_t>(w.headers().begin(),
                                                                 w.headers().end());
                             })
      .def("residues", &TwinWheel::residues)
      .def("twin_of", &TwinWheel::twin_of, py::arg("r"))
      .def("mark", &TwinWheel::mark, py::arg("entry"))
      .def("__contains__", &TwinWheel::contains)
      .def("_density_parts", [](const TwinWheel& w) { return rational_parts(w.density()); })
      .def("render", [](const TwinWheel& w, const std::string& fmt) {
        return render_table(w, fmt == "csv" ? TableFormat::kCsv : TableFormat::kText);
      }, py::arg("fmt") = "text");

  m.def("initial_wheel", &initial_wheel);
  m.def(
      "advance",
      [](const TwinWheel& w, std::uint64_t max_level) { return advance(w, WheelOptions{max_level}); },
      py::arg("wheel"), py::arg("max_level") = kDefaultWheelCap);
  m.def(
      "build_wheel",
      [](std::uint64_t level, std::uint64_t max_level) {
        return build_wheel(level, WheelOptions{max_level});
      },
      py::arg("level"), py::arg("max_level") = kDefaultWheelCap);
  m.def("wheel_members_below", &wheel_members_below, py::arg("wheel"), py::arg("bound"));
  m.def("deletion_step_of", &deletion_step_of, py::arg("q"), py::arg("max_level"));

  py::class_<LedgerStep>(m, "LedgerStep")
      .def_readonly("prime", &LedgerStep::prime)
      .def_readonly("deleted", &LedgerStep::deleted);
  py::class_<DeletionLedger>(m, "DeletionLedger")
      .def_readonly("bound", &DeletionLedger::bound)
      .def_readonly("steps", &DeletionLedger::steps)
      .def_readonly("survivors", &DeletionLedger::survivors)
      .def("total_deleted", &DeletionLedger::total_deleted);
  m.def("exact_deletion_ledger", &exact_deletion_ledger, py::arg("p"), py::arg("table"));

  // estimators
  m.def("_density_eq1_parts", [](std::uint64_t p) { return rational_parts(density_eq1(p)); });
  m.def("deleted_estimate_eq5", &deleted_estimate_eq5, py::arg("p"), py::arg("p_k"),
        py::arg("pi_p2"));
  m.def("estimate_eq7", &estimate_eq7, py::arg("p"), py::arg("pi_p2"));
  m.def("telescoping_total_eq6", &telescoping_total_eq6, py::arg("p"), py::arg("pi_p2"));
  m.def("correction_r", &correction_r, py::arg("p"), py::arg("pi_p2"));
  m.def("estimate_eq15", &estimate_eq15, py::arg("p"), py::arg("pi_p2"));
  m.def("asymptotic_eq16", &asymptotic_eq16, py::arg("x"), py::arg("product_bound"));
  m.def("mertens_check", &mertens_check, py::arg("p"));
  m.def("twin_product", &Constants::twin_product, py::arg("bound"));
  m.attr("EULER_GAMMA") = Constants::euler_gamma;
  m.attr("HALF_E_GAMMA") = Constants::half_e_gamma();

  // experiments
  py::enum_<CountingMode>(m, "CountingMode")
      .value("INDIVIDUAL", CountingMode::kIndividual)
      .value("PAIRS", CountingMode::kPairs);
  py::enum_<IntervalConvention>(m, "IntervalConvention")
      .value("PAIRS_MEETING_INTERVAL", IntervalConvention::kPairsMeetingInterval)
      .value("CLOSED", IntervalConvention::kClosed)
      .value("BELOW_SQUARE_MINUS_TWO", IntervalConvention::kBelowSquareMinusTwo);
  py::enum_<Rounding>(m, "Rounding")
      .value("HALF_AWAY_FROM_ZERO", Rounding::kHalfAwayFromZero)
      .value("TRUNCATE", Rounding::kTruncate);

  m.def(
      "count_actual_twins",
      [](std::uint64_t p, const PrimeTable& table, CountingMode mode, IntervalConvention conv) {
        return count_actual_twins(p, table, CountOptions{mode, conv});
      },
      py::arg("p"), py::arg("table"), py::arg("mode") = CountingMode::kIndividual,
      py::arg("convention") = IntervalConvention::kPairsMeetingInterval);

  py::class_<EstimateRow>(m, "EstimateRow")
      .def_readonly("p", &EstimateRow::p)
      .def_readonly("actual", &EstimateRow::actual)
      .def_readonly("pi_p2", &EstimateRow::pi_p2)
      .def_readonly("eq7", &EstimateRow::eq7)
      .def_readonly("r", &EstimateRow::r)
      .def_readonly("eq15", &EstimateRow::eq15);
  py::class_<TableReport>(m, "TableReport")
      .def_readonly("rows", &TableReport::rows)
      .def_property_readonly("generated_at",
                             [](const TableReport& t) { return t.metadata.generated_at; })
      .def_property_readonly("sieve_limit",
                             [](const TableReport& t) { return t.metadata.sieve_limit; })
      .def("to_csv", &format_table_csv);
  py::class_<FigurePoint>(m, "FigurePoint")
      .def_readonly("p", &FigurePoint::p)
      .def_readonly("pct_diff", &FigurePoint::pct_diff);
  py::class_<FigureSeries>(m, "FigureSeries")
      .def_readonly("label", &FigureSeries::label)
      .def_readonly("points", &FigureSeries::points)
      .def("to_dat", &format_series_dat);

  m.def("table4_primes", &table4_primes);
  m.def(
      "build_table4",
      [](const std::vector<std::uint64_t>& primes, const PrimeTable& table, Rounding rounding) {
        return build_table4(primes, table, rounding);
      },
      py::arg("primes"), py::arg("table"), py::arg("rounding") = Rounding::kHalfAwayFromZero);
  m.def("figure1_series", &figure1_series, py::arg("report"));
  m.def("export_report", &export_report, py::arg("report"), py::arg("series"), py::arg("out_dir"));
  m.def("round_count", &round_count, py::arg("value"), py::arg("rounding"));
}
