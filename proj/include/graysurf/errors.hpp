#pragma once

#include <stdexcept>
#include <string>

namespace graysurf {

/// Input lies outside the domain where an operation is defined
/// (pole of z, chart boundary, out-of-range family parameter).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A closed-form coefficient formula hit a vanishing denominator.
class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A polynomial or profile that must be positive on an interval is not.
class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, double witness)
      : std::runtime_error(what), witness_(witness) {}
  double witness() const noexcept { return witness_; }

 private:
  double witness_;
};

/// Improper integral does not converge (boundary root of z is not simple).
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The finite-difference oracle failed to reproduce a known analytic metric.
class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graysurf
