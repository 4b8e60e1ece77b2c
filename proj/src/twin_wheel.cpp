#include "twinsieve/twin_wheel.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

bool is_six_n_pm_one(std::uint64_t q) noexcept {
  const std::uint64_t m = q % 6;
  return q >= 5 && (m == 1 || m == 5);
}

// Twin of a number already known to be 6n +/- 1.
std::uint64_t twin_unchecked(std::uint64_t q) noexcept { return q % 6 == 5 ? q + 2 : q - 2; }

void require_prime(std::uint64_t v, const char* what, const char* fn) {
  if (!is_prime_trial(v))
    throw ArgumentError(std::string(fn) + ": " + what + " " + std::to_string(v) + " is not prime");
}

}  // namespace

std::uint64_t designated_twin(std::uint64_t q) {
  if (!is_six_n_pm_one(q))
    throw ArgumentError("designated_twin: " + std::to_string(q) + " is not of the form 6n +/- 1");
  return twin_unchecked(q);
}

std::vector<std::uint64_t> TwinWheel::residues() const {
  std::vector<std::uint64_t> out;
  out.reserve(headers_.size() * level_);
  for (std::uint64_t k = 0; k < level_; ++k)
    for (std::uint64_t h : headers_) out.push_back(h + k * base_period_);
  return out;
}

std::uint64_t TwinWheel::twin_of(std::uint64_t r) const {
  if (r < 5 || r >= 5 + period() || !contains(r))
    throw ArgumentError("twin_of: " + std::to_string(r) + " is not a residue of L_" +
                        std::to_string(level_));
  return twin_unchecked(r);
}

bool TwinWheel::contains(std::uint64_t n) const noexcept {
  if (!is_six_n_pm_one(n)) return false;
  const std::uint64_t r = (n - 5) % base_period_ + 5;
  return std::binary_search(headers_.begin(), headers_.end(), r);
}

Rational TwinWheel::density() const {
  return Rational(BigInt(headers_.size()), BigInt(base_period_));
}

DeletionMark TwinWheel::mark(std::uint64_t entry) const noexcept {
  if (entry % level_ == 0) return DeletionMark::kMultiple;
  if (is_six_n_pm_one(entry) && twin_unchecked(entry) % level_ == 0)
    return DeletionMark::kTwinOfMultiple;
  return DeletionMark::kKept;
}

TwinWheel initial_wheel() { return TwinWheel(5, 6, {5, 7}); }

TwinWheel advance(const TwinWheel& wheel, const WheelOptions& options) {
  const std::uint64_t p = wheel.level();
  const std::uint64_t next = next_prime(p);
  if (next > options.max_level)
    throw ResourceError("advance: level " + std::to_string(next) + " exceeds wheel cap " +
                        std::to_string(options.max_level));

  // Each column holds one multiple of p and one twin of a multiple, so the
  // survivor count is exact.
  std::vector<std::uint64_t> survivors;
  survivors.reserve(wheel.column_count() * (p - 2));
  const std::uint64_t base = wheel.base_period();
  for (std::uint64_t k = 0; k < p; ++k) {
    for (std::uint64_t h : wheel.headers()) {
      const std::uint64_t e = h + k * base;
      if (e % p == 0 || twin_unchecked(e) % p == 0) continue;
      survivors.push_back(e);
    }
  }
  return TwinWheel(next, base * p, std::move(survivors));
}

TwinWheel build_wheel(std::uint64_t level, const WheelOptions& options) {
  if (level < 5) throw ArgumentError("build_wheel: level must be at least 5");
  require_prime(level, "level", "build_wheel");
  if (level > options.max_level)
    throw ResourceError("build_wheel: level " + std::to_string(level) + " exceeds wheel cap " +
                        std::to_string(options.max_level));
  TwinWheel w = initial_wheel();
  while (w.level() < level) w = advance(w, options);
  return w;
}

std::vector<std::uint64_t> wheel_members_below(const TwinWheel& wheel, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  const std::uint64_t base = wheel.base_period();
  for (std::uint64_t offset = 0; offset + 5 < bound; offset += base) {
    for (std::uint64_t h : wheel.headers()) {
      const std::uint64_t v = h + offset;
      if (v >= bound) return out;
      out.push_back(v);
    }
  }
  return out;
}

std::optional<std::uint64_t> deletion_step_of(std::uint64_t q, std::uint64_t max_level) {
  if (q < 5) throw ArgumentError("deletion_step_of: q must be at least 5, got " + std::to_string(q));
  require_prime(q, "q", "deletion_step_of");
  require_prime(max_level, "max_level", "deletion_step_of");

  const std::uint64_t t = twin_unchecked(q);
  std::uint64_t spf = t;
  for (std::uint64_t d = 5; d <= t / d; d += 2) {
    if (t % d == 0) {
      spf = d;
      break;
    }
  }
  const std::uint64_t step = std::min(q, spf);
  if (step < max_level) return step;
  return std::nullopt;
}

std::uint64_t DeletionLedger::total_deleted() const noexcept {
  std::uint64_t s = 0;
  for (const auto& step : steps) s += step.deleted;
  return s;
}

DeletionLedger exact_deletion_ledger(std::uint64_t p, const PrimeTable& table) {
  if (p < 5) throw ArgumentError("exact_deletion_ledger: p must be at least 5");
  require_prime(p, "p", "exact_deletion_ledger");
  const std::uint64_t bound = p * p;
  if (table.limit() < bound)
    throw RangeError("exact_deletion_ledger: table limit " + std::to_string(table.limit()) +
                     " is below p^2 = " + std::to_string(bound));

  std::vector<std::uint64_t> sieving;
  for (std::uint64_t s : primes_up_to(p - 1))
    if (s >= 5) sieving.push_back(s);

  std::vector<std::uint64_t> counts(sieving.size(), 0);
  DeletionLedger ledger;
  ledger.bound = bound;

  for (std::uint64_t q : table.primes_between(5, bound - 1)) {
    const std::uint64_t t = twin_unchecked(q);
    // Smallest prime factor of the twin among the sieving primes; a prime
    // twin is its own factor, a composite one has a factor below sqrt(t) < p.
    std::uint64_t step = q;
    if (table.is_prime(t)) {
      step = std::min(step, t);
    } else {
      for (std::uint64_t s : sieving) {
        if (s >= step) break;
        if (t % s == 0) {
          step = s;
          break;
        }
      }
    }
    if (step < p) {
      auto it = std::lower_bound(sieving.begin(), sieving.end(), step);
      ++counts[static_cast<std::size_t>(it - sieving.begin())];
    } else {
      ++ledger.survivors;
    }
  }

  ledger.steps.reserve(sieving.size());
  for (std::size_t i = 0; i < sieving.size(); ++i) ledger.steps.push_back({sieving[i], counts[i]});
  return ledger;
}

const char* to_string(DeletionMark mark) noexcept {
  switch (mark) {
    case DeletionMark::kKept:
      return "kept";
    case DeletionMark::kMultiple:
      return "multiple";
    case DeletionMark::kTwinOfMultiple:
      return "twin";
  }
  return "kept";
}

void render_table(const TwinWheel& wheel, TableFormat format, std::ostream& out) {
  const std::uint64_t base = wheel.base_period();
  const auto headers = wheel.headers();
  if (format == TableFormat::kCsv) {
    out << "row,column,value,mark\n";
    for (std::uint64_t k = 0; k < wheel.level(); ++k)
      for (std::size_t c = 0; c < headers.size(); ++c) {
        const std::uint64_t v = headers[c] + k * base;
        out << k << ',' << c << ',' << v << ',' << to_string(wheel.mark(v)) << '\n';
      }
    return;
  }

  const std::size_t width = std::to_string(5 + wheel.period()).size() + 2;
  for (std::uint64_t k = 0; k < wheel.level(); ++k) {
    for (std::size_t c = 0; c < headers.size(); ++c) {
      const std::uint64_t v = headers[c] + k * base;
      std::string cell = std::to_string(v);
      switch (wheel.mark(v)) {
        case DeletionMark::kMultiple:
          cell = "[" + cell + "]";
          break;
        case DeletionMark::kTwinOfMultiple:
          cell = "(" + cell + ")";
          break;
        case DeletionMark::kKept:
          cell = " " + cell + " ";
          break;
      }
      if (c) out << ' ';
      out << std::string(width > cell.size() ? width - cell.size() : 0, ' ') << cell;
    }
    out << '\n';
  }
}

std::string render_table(const TwinWheel& wheel, TableFormat format) {
  std::ostringstream os;
  render_table(wheel, format, os);
  return os.str();
}

}  // namespace twinsieve
