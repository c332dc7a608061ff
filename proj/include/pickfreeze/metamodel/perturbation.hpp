#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "pickfreeze/model.hpp"
#include "pickfreeze/rng.hpp"

namespace pickfreeze {

/// An N-indexed approximation f~_N of a base model. `build` returns the
/// model seen by a Monte Carlo run of size N. Synthetic families attach a
/// per-evaluation perturbation; trained families return a deterministic
/// surrogate. Randomness used while building comes only from `rng`.
struct MetamodelFamily {
  std::string name;
  ModelSpec base;
  std::function<ModelSpec(std::size_t n_monte_carlo, const RngStream& rng)> build;
};

/// Multiplier 5 N^(-beta/2) shared by the synthetic families.
double perturbation_scale(std::size_t n_monte_carlo, double beta);

/// f + 5 xi / N^(beta/2) with xi ~ N(0,1) redrawn at every evaluation.
/// Throws ConfigurationError unless beta > 0.
MetamodelFamily gaussian_perturbation(const ModelSpec& base, double beta);

/// f + 5 W x_k^2 / N^(beta/2) with W ~ Weibull(1, 1/2) redrawn at every
/// evaluation; k = x3_index.
MetamodelFamily weibull_perturbation(const ModelSpec& base, double beta, std::size_t x3_index);

}  // namespace pickfreeze
