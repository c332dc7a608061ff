#pragma once

#include <variant>
#include <vector>

#include "pickfreeze/rng.hpp"

namespace pickfreeze {

struct Uniform {
  double lo;
  double hi;
};

struct StandardNormal {};

/// Weibull with scale lambda and shape k; density k/l (x/l)^(k-1) exp(-(x/l)^k).
struct Weibull {
  double scale;
  double shape;
};

/// Finite law: values[i] with probability probs[i].
struct Discrete {
  std::vector<double> values;
  std::vector<double> probs;
};

/// Law of a single input coordinate.
class InputDistribution {
 public:
  using Kind = std::variant<Uniform, StandardNormal, Weibull, Discrete>;

  /// Throws ConfigurationError on invalid parameters.
  InputDistribution(Kind kind);  // NOLINT(google-explicit-constructor)

  static InputDistribution uniform(double lo, double hi) { return {Uniform{lo, hi}}; }
  static InputDistribution standard_normal() { return {StandardNormal{}}; }
  static InputDistribution weibull(double scale, double shape) { return {Weibull{scale, shape}}; }
  static InputDistribution discrete(std::vector<double> values, std::vector<double> probs) {
    return {Discrete{std::move(values), std::move(probs)}};
  }

  const Kind& kind() const noexcept { return kind_; }
  bool is_discrete() const noexcept { return std::holds_alternative<Discrete>(kind_); }
  const Discrete& as_discrete() const { return std::get<Discrete>(kind_); }

  double sample(Rng& rng) const;

 private:
  Kind kind_;
  std::vector<double> cdf_;  // cumulative probs, discrete only
};

/// Inverse-CDF Weibull draw: scale * (-ln(1-U))^(1/shape).
double sample_weibull(Rng& rng, double scale, double shape);

}  // namespace pickfreeze
