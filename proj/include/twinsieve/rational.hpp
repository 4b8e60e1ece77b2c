#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace twinsieve {

// Exact rationals for the density and telescoping identities.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace twinsieve
