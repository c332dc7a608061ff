#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace pickfreeze {

enum class DecayLaw { Exponential, Power };

/// Exponential: Var ~ C exp(-rate n^(1/p)). Power: Var ~ C n^(-rate).
struct DecayFit {
  DecayLaw law = DecayLaw::Exponential;
  double c = 0.0;
  double rate = 0.0;
  double r2 = 0.0;
  double p = 1.0;  // exponential only

  double predict(double n) const noexcept;
};

std::string_view to_string(DecayLaw law) noexcept;

/// Least squares of ln Var on n^(1/p). Throws DomainError for non-positive
/// variances and ConfigurationError for fewer than two distinct n.
DecayFit fit_exponential_decay(std::span<const double> ns, std::span<const double> vars, double p);

/// Least squares of ln Var on ln n.
DecayFit fit_power_decay(std::span<const double> ns, std::span<const double> vars);

/// 1 / rate: the smallest growth exponent a for which N Var(delta_N) -> 0.
/// Throws DomainError when rate <= 0.
double critical_growth_rate(const DecayFit& fit);

}  // namespace pickfreeze
