#pragma once

#include <stdexcept>
#include <string>

namespace octosl {

// Input violates an operation's stated precondition (wrong chirality,
// non-unit normal, entries outside a subalgebra, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request: inverse of zero, projection of the
// zero twistor.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// det ρ is zero or below the configured near-singular floor.
class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace octosl
