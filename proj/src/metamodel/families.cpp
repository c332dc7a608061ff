#include "pickfreeze/metamodel/families.hpp"

#include <cmath>
#include <fmt/core.h>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/metamodel/design.hpp"
#include "pickfreeze/metamodel/nadaraya_watson.hpp"
#include "pickfreeze/metamodel/rkhs.hpp"

namespace pickfreeze {

namespace {

// ceil that ignores rounding noise just above an exact integer.
std::size_t ceil_count(double x) {
  const double r = std::ceil(x - 1e-9 * std::max(1.0, std::abs(x)));
  return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

std::vector<double> exact_observations(const ModelSpec& base, const Matrix& points) {
  std::vector<double> out(points.rows);
  for (std::size_t i = 0; i < points.rows; ++i) {
    out[i] = base.evaluate(points.row(i));
    if (!std::isfinite(out[i]))
      throw EvaluationError("model returned a non-finite value on the learning design",
                            std::vector<double>(points.row(i).begin(), points.row(i).end()));
  }
  return out;
}

}  // namespace

std::size_t learning_size_rkhs(double a, std::size_t n_monte_carlo) {
  if (!(a > 0.0)) throw ConfigurationError("growth rate a must be > 0");
  if (n_monte_carlo < 2) throw ConfigurationError("Monte Carlo size must be >= 2");
  return ceil_count(std::pow(a * std::log(static_cast<double>(n_monte_carlo)), 3.0));
}

std::size_t learning_size_nw(double a, std::size_t n_monte_carlo) {
  if (!(a > 0.0)) throw ConfigurationError("growth rate a must be > 0");
  if (n_monte_carlo < 2) throw ConfigurationError("Monte Carlo size must be >= 2");
  return ceil_count(std::pow(static_cast<double>(n_monte_carlo), a));
}

Surrogate train_rkhs(const ModelSpec& base, std::size_t n, const RngStream& rng,
                     const RkhsOptions& options) {
  const auto bounds = support_bounds(base.input_laws);
  const Design design = maximin_lhs(n, bounds, rng.substream(0), options.swaps_per_point * n);
  const auto obs = exact_observations(base, design.points);
  return rkhs_fit(design, obs, median_distance_bandwidths(design, options.bandwidth_scale), 0.0,
                  /*center=*/true);
}

Surrogate train_nw(const ModelSpec& base, std::size_t n, const RngStream& rng,
                   const NwOptions& options) {
  if (!(options.noise_sd >= 0.0)) throw ConfigurationError("noise sd must be >= 0");
  const Design design = iid_design(n, base.input_laws, rng.substream(0));
  auto obs = exact_observations(base, design.points);
  const RngStream noise = rng.substream(1);
  for (std::size_t i = 0; i < n; ++i) {
    Rng engine = noise.substream(i).engine();
    obs[i] += options.noise_sd * engine.normal();
  }
  const auto grid = options.grid.empty() ? log_grid(0.1, 10.0, 10) : options.grid;
  return nw_fit(design, obs, select_bandwidth_nw(design, obs, grid));
}

MetamodelFamily rkhs_family(const ModelSpec& base, double a, RkhsOptions options) {
  learning_size_rkhs(a, 2);
  MetamodelFamily family;
  family.name = fmt::format("rkhs(a={})", a);
  family.base = base;
  family.build = [base, a, options](std::size_t n_mc, const RngStream& rng) {
    return train_rkhs(base, learning_size_rkhs(a, n_mc), rng, options).as_model(base);
  };
  return family;
}

MetamodelFamily nw_family(const ModelSpec& base, double a, NwOptions options) {
  learning_size_nw(a, 2);
  MetamodelFamily family;
  family.name = fmt::format("nw(a={})", a);
  family.base = base;
  family.build = [base, a, options](std::size_t n_mc, const RngStream& rng) {
    return train_nw(base, learning_size_nw(a, n_mc), rng, options).as_model(base);
  };
  return family;
}

}  // namespace pickfreeze
