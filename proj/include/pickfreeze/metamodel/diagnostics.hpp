#pragma once

#include <cstddef>
#include <span>

#include "pickfreeze/metamodel/perturbation.hpp"
#include "pickfreeze/metamodel/surrogate.hpp"
#include "pickfreeze/model.hpp"

namespace pickfreeze {

/// Empirical variance of f~(u) - f(u) over n_test i.i.d. draws of the base
/// model's inputs. Perturbations of `approx` are drawn per evaluation.
/// Throws ConfigurationError when n_test < 2.
double estimate_error_variance(const ModelSpec& base, const ModelSpec& approx,
                               std::size_t n_test, const RngStream& rng);
double estimate_error_variance(const ModelSpec& base, const Surrogate& surrogate,
                               std::size_t n_test, const RngStream& rng);

/// Plug-in C_{delta,N}:
///   2 sd(Y) [Corr(Y, d^X) - Corr(Y, Y^X) Corr(Y, d)]
///     + sd(d) [Corr(d, d^X) - Corr(Y, Y^X)].
/// Returns 0 when the empirical Var(d) is 0. Throws DegenerateError when
/// Var(y) = 0 and ConfigurationError for unequal lengths or fewer than two
/// entries.
double c_delta_estimate(std::span<const double> y, std::span<const double> y_x,
                        std::span<const double> delta, std::span<const double> delta_x);

}  // namespace pickfreeze
