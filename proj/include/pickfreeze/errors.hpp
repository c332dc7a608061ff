#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pickfreeze {

/// Invalid distribution parameters, plan fields, or model/block selection.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Zero variance where a ratio of variances is required.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model returned a non-finite value. Carries the offending input.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::vector<double> input)
      : std::runtime_error(what), input_(std::move(input)) {}
  const std::vector<double>& input() const noexcept { return input_; }

 private:
  std::vector<double> input_;
};

/// Kernel Gram matrix could not be factorized even after nugget escalation.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment plan rejected before any compute (e.g. learning budget cap).
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pickfreeze
