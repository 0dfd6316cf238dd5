#pragma once

#include <stdexcept>
#include <string>

namespace torustab {

// Malformed input: size mismatches, non-bijective image lists, wrong cycle shapes.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside the operation's domain (disconnected map, knot where a link is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pipeline stages requested out of order (missing smaller crossing levels).
class OrderingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torustab
