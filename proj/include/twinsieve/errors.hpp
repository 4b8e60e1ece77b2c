#pragma once

#include <stdexcept>
#include <string>

namespace twinsieve {

// Argument outside the supported domain (limit too large, x past the table).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Argument of the wrong kind (composite where a prime is required, bad ordering).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested structure would exceed a configured materialization cap.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numeric result is undefined for the given data (e.g. division by a zero count).
class ComputationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace twinsieve
