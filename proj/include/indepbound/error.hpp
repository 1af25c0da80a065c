#pragma once

#include <stdexcept>
#include <string>

namespace indepbound {

// Malformed arguments or parameters outside an operation's domain.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or construction would exceed a configured size cap.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A quantity is mathematically undefined for the given input
// (e.g. a bound needing log D with D <= 1).
class undefined_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace indepbound
