// estimators.hpp
// Closed-form twin-prime count estimates built from the double sieve.
//
// Conventions: p is the n-th prime p_n, pi_p2 is the exact pi(p^2), and
// "individual" counting is used throughout (both members of a pair count).
// All real-valued results are IEEE double. Exact rational variants are
// provided where an identity must be checked with zero tolerance.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "twinsieve/rational.hpp"

namespace twinsieve {

struct Constants {
  // Euler-Mascheroni constant to 15 significant digits.
  static constexpr double euler_gamma = 0.577215664901533;

  // e^gamma / 2, the limit of the correction factor r.
  static double half_e_gamma();

  // Product over primes 3 <= q <= bound of q (q - 2) / (q - 1)^2.
  static double twin_product(std::uint64_t bound);

  // twin_product at each requested bound.
  static std::map<std::uint64_t, double> twin_product_truncations(
      std::span<const std::uint64_t> bounds);
};

// Above this many factors, products are accumulated as a sum of logs.
inline constexpr std::size_t kLogSpaceThreshold = 100'000;

// Product of the factors in the given order, switching to log space past
// kLogSpaceThreshold factors.
double product(std::span<const double> factors);

// exp(sum log f), with compensated summation.
double log_space_product(std::span<const double> factors);

// Density of L_{p_n}: product over 2 <= k <= n - 1 of (p_k - 2) / p_k.
// Requires p_n prime and >= 5.
Rational density_eq1(std::uint64_t p_n);

// Approximate number of primes below p^2 deleted when sieving by p_k:
// prod_{i=3}^{k-1} (p_i - 2)/(p_i - 1) * pi_p2 / (p_k - 1).
// Requires primes 5 <= p_k <= p.
double deleted_estimate_eq5(std::uint64_t p, std::uint64_t p_k, std::uint64_t pi_p2);

// The same quantity in its other written form, 2 prod_{i=2}^{k-1}(p_i - 2) *
// pi_p2 / phi(p_k#), evaluated exactly.
Rational deleted_estimate_eq5_exact(std::uint64_t p, std::uint64_t p_k, std::uint64_t pi_p2);

// Exact per-step estimates for every sieving prime 5 <= p_k <= p, in order.
std::vector<Rational> deleted_estimates_exact(std::uint64_t p, std::uint64_t pi_p2);

// Survivor estimate prod_{5 <= q <= p} (q - 2)/(q - 1) * pi_p2.
double estimate_eq7(std::uint64_t p, std::uint64_t pi_p2);
Rational estimate_eq7_exact(std::uint64_t p, std::uint64_t pi_p2);

// Telescoped total of the per-step estimates:
// [1 - prod_{5 <= q <= p} (1 - 1/(q - 1))] * pi_p2.
double telescoping_total_eq6(std::uint64_t p, std::uint64_t pi_p2);

// r = pi_p2 / p^2 * prod_{q <= p} q / (q - 1).
double correction_r(std::uint64_t p, std::uint64_t pi_p2);

// pi_p2^2 / p^2 * 4 * prod_{3 <= q <= p} q (q - 2) / (q - 1)^2.
double estimate_eq15(std::uint64_t p, std::uint64_t pi_p2);

// correction_r(p, pi_p2) * estimate_eq7(p, pi_p2); algebraically equal to
// estimate_eq15.
double estimate_eq15_via_r(std::uint64_t p, std::uint64_t pi_p2);

// 4 x / ln^2 x * twin_product(product_bound). Requires x > e^2 and
// product_bound >= 3.
double asymptotic_eq16(double x, std::uint64_t product_bound);

// prod_{q <= p} (q - 1)/q * ln(p^2) / (2 e^-gamma); tends to 1.
double mertens_check(std::uint64_t p);

}  // namespace twinsieve
