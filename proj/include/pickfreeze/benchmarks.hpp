#pragma once

#include <array>
#include <span>

#include "pickfreeze/model.hpp"

namespace pickfreeze {

inline constexpr double kIshigamiA = 7.0;
inline constexpr double kIshigamiB = 0.1;

/// sin x1 + 7 sin^2 x2 + 0.1 x3^4 sin x1.
double ishigami(std::span<const double> x) noexcept;

/// Closed-form first-order indices (S1, S2, S3) for inputs i.i.d. U(-pi, pi).
std::array<double, 3> ishigami_exact_indices() noexcept;

/// Closed-form Var(Y) of the Ishigami output.
double ishigami_variance() noexcept;

/// Ishigami with blocks "x1", "x2", "x3" (frozen block x1 by default).
RegisteredModel ishigami_model();

/// f(X, Z) = aX + bZ with X, Z standard normal; blocks "x" and "z".
/// Throws DegenerateError when a = b = 0.
RegisteredModel linear_gaussian(double a, double b);

/// f(X, Z) = X + Z with X, Z ~ Bernoulli(1/2); blocks "x" and "z" (index 1/2 each).
RegisteredModel bernoulli_sum();

}  // namespace pickfreeze
