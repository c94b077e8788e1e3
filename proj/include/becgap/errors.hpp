#pragma once

#include <stdexcept>
#include <string>

namespace becgap {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A quantity (series, critical density, ...) diverges at the requested point.
class DivergenceError : public DomainError {
public:
  using DomainError::DomainError;
};

// Numerical scheme could not reach its accuracy target.
class AccuracyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An optimiser or root bracket hit the edge of its search interval.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller asked for a branch that does not apply at the given point.
class BranchError : public DomainError {
public:
  using DomainError::DomainError;
};

// Particle-number truncation of a finite-volume sum was too small.
class TruncationError : public std::runtime_error {
public:
  TruncationError(const std::string& what, long suggested)
      : std::runtime_error(what), suggested_n_max(suggested) {}
  long suggested_n_max;
};

}  // namespace becgap
