#pragma once

#include <cstddef>
#include <vector>

#include "pickfreeze/metamodel/perturbation.hpp"
#include "pickfreeze/metamodel/surrogate.hpp"

namespace pickfreeze {

/// Learning-sample size n = ceil((a ln N)^3).
std::size_t learning_size_rkhs(double a, std::size_t n_monte_carlo);
/// Learning-sample size n = ceil(N^a).
std::size_t learning_size_nw(double a, std::size_t n_monte_carlo);

struct RkhsOptions {
  double bandwidth_scale = 1.7;     // multiplier on the median-distance bandwidths
  std::size_t swaps_per_point = 10;  // maximin iterations = swaps_per_point * n
};

struct NwOptions {
  double noise_sd = 0.3;
  std::vector<double> grid = {};  // empty: 10 multipliers log-spaced on [0.1, 10]
};

/// Trains an RKHS interpolator of `base` on a maximin LHS of exact
/// evaluations with the constant trend mean(obs) removed before the solve.
Surrogate train_rkhs(const ModelSpec& base, std::size_t n, const RngStream& rng,
                     const RkhsOptions& options = {});

/// Trains a Nadaraya-Watson regressor of `base` on i.i.d. inputs with
/// additive N(0, noise_sd^2) observation noise; bandwidth by LOO CV.
Surrogate train_nw(const ModelSpec& base, std::size_t n, const RngStream& rng,
                   const NwOptions& options = {});

MetamodelFamily rkhs_family(const ModelSpec& base, double a, RkhsOptions options = {});
MetamodelFamily nw_family(const ModelSpec& base, double a, NwOptions options = {});

}  // namespace pickfreeze
