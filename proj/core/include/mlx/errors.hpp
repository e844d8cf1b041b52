#pragma once

#include <stdexcept>
#include <string>

namespace mlx {

// Argument outside the supported domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A gamma-function pole was hit on the evaluation path.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series or quadrature did not meet its tolerance within budget. Carries the
// best estimate available when the computation stopped.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double partial)
      : std::runtime_error(what), partial_(partial) {}

  double partial_value() const noexcept { return partial_; }

 private:
  double partial_;
};

// An asymptotic expansion could not reach the requested accuracy.
class AccuracyLossError : public NonConvergenceError {
 public:
  using NonConvergenceError::NonConvergenceError;
};

// The integrand produced a non-finite value at a node that carries weight.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace mlx
