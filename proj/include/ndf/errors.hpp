#pragma once

#include <stdexcept>
#include <string>

namespace ndf {

/// Invalid construction parameters (bad triplet, weights, parameters outside a domain).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a function, e.g. a negative Bernstein argument.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

/// Exact enumeration would exceed the configured term budget.
class EnumerationLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Covariance matrix has an eigenvalue below the clipping tolerance.
class IndefiniteCovariance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ndf
