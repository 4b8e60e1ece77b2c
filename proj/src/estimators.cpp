#include "twinsieve/estimators.hpp"

#include <cmath>
#include <string>

#include "twinsieve/errors.hpp"
#include "twinsieve/prime_core.hpp"

namespace twinsieve {

namespace {

void require_sieving_prime(std::uint64_t p, const char* fn) {
  if (p < 5) throw ArgumentError(std::string(fn) + ": p must be at least 5, got " + std::to_string(p));
  if (!is_prime_trial(p))
    throw ArgumentError(std::string(fn) + ": " + std::to_string(p) + " is not prime");
}

template <class F>
double prime_product(std::uint64_t lo, std::uint64_t hi, F&& factor) {
  std::vector<double> fs;
  for (std::uint64_t q : primes_up_to(hi))
    if (q >= lo) fs.push_back(factor(static_cast<double>(q)));
  return product(fs);
}

}  // namespace

double Constants::half_e_gamma() { return std::exp(euler_gamma) / 2.0; }

double Constants::twin_product(std::uint64_t bound) {
  return prime_product(3, bound, [](double q) { return q * (q - 2.0) / ((q - 1.0) * (q - 1.0)); });
}

std::map<std::uint64_t, double> Constants::twin_product_truncations(
    std::span<const std::uint64_t> bounds) {
  std::map<std::uint64_t, double> out;
  for (std::uint64_t b : bounds) out.emplace(b, twin_product(b));
  return out;
}

double product(std::span<const double> factors) {
  if (factors.size() > kLogSpaceThreshold) return log_space_product(factors);
  double acc = 1.0;
  for (double f : factors) acc *= f;
  return acc;
}

double log_space_product(std::span<const double> factors) {
  // Kahan-Babuska summation of the logs.
  double sum = 0.0;
  double comp = 0.0;
  for (double f : factors) {
    const double v = std::log(f);
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  return std::exp(sum + comp);
}

Rational density_eq1(std::uint64_t p_n) {
  require_sieving_prime(p_n, "density_eq1");
  Rational d(1);
  for (std::uint64_t q : primes_up_to(p_n - 1))
    if (q >= 3) d *= Rational(BigInt(q - 2), BigInt(q));
  return d;
}

double deleted_estimate_eq5(std::uint64_t p, std::uint64_t p_k, std::uint64_t pi_p2) {
  require_sieving_prime(p, "deleted_estimate_eq5");
  require_sieving_prime(p_k, "deleted_estimate_eq5");
  if (p_k > p)
    throw ArgumentError("deleted_estimate_eq5: sieving prime " + std::to_string(p_k) +
                        " is larger than p = " + std::to_string(p));
  const double head = prime_product(5, p_k - 1, [](double q) { return (q - 2.0) / (q - 1.0); });
  return head * static_cast<double>(pi_p2) / static_cast<double>(p_k - 1);
}

std::vector<Rational> deleted_estimates_exact(std::uint64_t p, std::uint64_t pi_p2) {
  require_sieving_prime(p, "deleted_estimates_exact");
  // 2 prod_{i=2}^{k-1} (p_i - 2) / phi(p_k#), accumulated prime by prime.
  std::vector<Rational> out;
  BigInt numer = 2;      // 2 (3 - 2) (5 - 2) ... over the primes before p_k
  BigInt phi = 1 * 2;    // (2 - 1)(3 - 1)
  for (std::uint64_t q : primes_up_to(p)) {
    if (q < 5) continue;
    phi *= q - 1;
    out.emplace_back(Rational(numer * pi_p2, phi));
    numer *= q - 2;
  }
  return out;
}

Rational deleted_estimate_eq5_exact(std::uint64_t p, std::uint64_t p_k, std::uint64_t pi_p2) {
  require_sieving_prime(p, "deleted_estimate_eq5_exact");
  require_sieving_prime(p_k, "deleted_estimate_eq5_exact");
  if (p_k > p)
    throw ArgumentError("deleted_estimate_eq5_exact: sieving prime " + std::to_string(p_k) +
                        " is larger than p = " + std::to_string(p));
  return deleted_estimates_exact(p_k, pi_p2).back();
}

double estimate_eq7(std::uint64_t p, std::uint64_t pi_p2) {
  require_sieving_prime(p, "estimate_eq7");
  return prime_product(5, p, [](double q) { return (q - 2.0) / (q - 1.0); }) *
         static_cast<double>(pi_p2);
}

Rational estimate_eq7_exact(std::uint64_t p, std::uint64_t pi_p2) {
  require_sieving_prime(p, "estimate_eq7_exact");
  BigInt numer = pi_p2;
  BigInt denom = 1;
  for (std::uint64_t q : primes_up_to(p)) {
    if (q < 5) continue;
    numer *= q - 2;
    denom *= q - 1;
  }
  return Rational(numer, denom);
}

double telescoping_total_eq6(std::uint64_t p, std::uint64_t pi_p2) {
  require_sieving_prime(p, "telescoping_total_eq6");
  const double kept = prime_product(5, p, [](double q) { return 1.0 - 1.0 / (q - 1.0); });
  return (1.0 - kept) * static_cast<double>(pi_p2);
}

double correction_r(std::uint64_t p, std::uint64_t pi_p2) {
  require_sieving_prime(p, "correction_r");
  const double x = static_cast<double>(p) * static_cast<double>(p);
  return static_cast<double>(pi_p2) / x * prime_product(2, p, [](double q) { return q / (q - 1.0); });
}

double estimate_eq15(std::uint64_t p, std::uint64_t pi_p2) {
  require_sieving_prime(p, "estimate_eq15");
  const double x = static_cast<double>(p) * static_cast<double>(p);
  const double pi = static_cast<double>(pi_p2);
  return pi * pi / x * 4.0 * Constants::twin_product(p);
}

double estimate_eq15_via_r(std::uint64_t p, std::uint64_t pi_p2) {
  return correction_r(p, pi_p2) * estimate_eq7(p, pi_p2);
}

double asymptotic_eq16(double x, std::uint64_t product_bound) {
  if (!(x > std::exp(2.0)))
    throw ArgumentError("asymptotic_eq16: x must exceed e^2, got " + std::to_string(x));
  if (product_bound < 3)
    throw ArgumentError("asymptotic_eq16: product_bound must be at least 3");
  const double lx = std::log(x);
  return 4.0 * x / (lx * lx) * Constants::twin_product(product_bound);
}

double mertens_check(std::uint64_t p) {
  require_sieving_prime(p, "mertens_check");
  const double density = prime_product(2, p, [](double q) { return (q - 1.0) / q; });
  const double lx = std::log(static_cast<double>(p) * static_cast<double>(p));
  return density * lx / (2.0 * std::exp(-Constants::euler_gamma));
}

}  // namespace twinsieve
