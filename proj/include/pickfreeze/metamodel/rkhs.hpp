#pragma once

#include <span>
#include <vector>

#include "pickfreeze/metamodel/surrogate.hpp"

namespace pickfreeze {

/// Solves (K + nugget I) w = obs - c by Cholesky, where c = mean(obs) when
/// `center` is set and 0 otherwise; predictions are c + sum_i w_i K(u, d_i).
/// When the factorization fails or the relative residual exceeds 1e-8 the
/// nugget is raised (1e-12 of the mean diagonal, then x10 per retry) up to
/// 1e-4 of the mean diagonal; beyond that ConditioningError is thrown.
Surrogate rkhs_fit(const Design& design, std::span<const double> observations,
                   std::vector<double> bandwidths, double nugget = 0.0, bool center = false);

/// Per-dimension median of |d_i,j - d_k,j| over pairs i < k, times `scale`.
std::vector<double> median_distance_bandwidths(const Design& design, double scale = 1.0);

}  // namespace pickfreeze
