#pragma once

#include <stdexcept>
#include <string>

namespace pqm {

// A precondition on a mathematical argument does not hold (CLI exit code 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested series or integral does not converge for these parameters.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed tuning input such as a quadrature policy.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An integrand produced NaN or infinity at an interior abscissa.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(double abscissa, double value);

  double abscissa() const noexcept { return abscissa_; }
  double value() const noexcept { return value_; }

 private:
  double abscissa_;
  double value_;
};

// Raised by operations that return a bare number when an inner evaluation
// exhausted its budget (CLI exit code 2).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pqm
