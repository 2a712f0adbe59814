#pragma once

#include <stdexcept>
#include <string>

namespace radonfd {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a pole (e.g. 1/Γ(-q) for q = 0, 1, 2, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical procedure failed to reach its tolerance. Carries the best
/// estimate obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_estimate)
      : std::runtime_error(what), partial_(partial_estimate) {}

  double partial_estimate() const noexcept { return partial_; }

 private:
  double partial_;
};

}  // namespace radonfd
