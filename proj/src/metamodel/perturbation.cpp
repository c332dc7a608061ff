#include "pickfreeze/metamodel/perturbation.hpp"

#include <cmath>
#include <fmt/core.h>

#include "pickfreeze/distribution.hpp"
#include "pickfreeze/errors.hpp"

namespace pickfreeze {

double perturbation_scale(std::size_t n_monte_carlo, double beta) {
  return 5.0 * std::pow(static_cast<double>(n_monte_carlo), -beta / 2.0);
}

MetamodelFamily gaussian_perturbation(const ModelSpec& base, double beta) {
  if (!(beta > 0.0)) throw ConfigurationError(fmt::format("beta must be > 0, got {}", beta));
  MetamodelFamily family;
  family.name = fmt::format("gaussian(beta={})", beta);
  family.base = base;
  family.build = [base, beta](std::size_t n, const RngStream&) {
    ModelSpec m = base;
    const double scale = perturbation_scale(n, beta);
    m.perturbation = [scale](std::span<const double>, Rng& rng) { return scale * rng.normal(); };
    return m;
  };
  return family;
}

MetamodelFamily weibull_perturbation(const ModelSpec& base, double beta, std::size_t x3_index) {
  if (!(beta > 0.0)) throw ConfigurationError(fmt::format("beta must be > 0, got {}", beta));
  if (x3_index >= base.dimension)
    throw ConfigurationError(fmt::format("perturbation coordinate {} out of range", x3_index));
  MetamodelFamily family;
  family.name = fmt::format("weibull(beta={})", beta);
  family.base = base;
  family.build = [base, beta, x3_index](std::size_t n, const RngStream&) {
    ModelSpec m = base;
    const double scale = perturbation_scale(n, beta);
    m.perturbation = [scale, x3_index](std::span<const double> x, Rng& rng) {
      const double w = sample_weibull(rng, 1.0, 0.5);
      return scale * w * x[x3_index] * x[x3_index];
    };
    return m;
  };
  return family;
}

}  // namespace pickfreeze
