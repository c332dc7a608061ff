#include "pickfreeze/metamodel/rkhs.hpp"

// Gram solves run inside parallel replicates; keep Eigen single-threaded so
// results never depend on the thread count.
#define EIGEN_DONT_PARALLELIZE
#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fmt/core.h>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

namespace {
constexpr double kResidualTolerance = 1e-8;
constexpr double kFirstJitter = 1e-12;
constexpr double kMaxJitter = 1e-4;
}  // namespace

Surrogate rkhs_fit(const Design& design, std::span<const double> observations,
                   std::vector<double> bandwidths, double nugget, bool center) {
  const std::size_t n = design.size();
  const std::size_t p = design.dimension();
  if (n < 1) throw ConfigurationError("rkhs_fit needs at least one design point");
  if (observations.size() != n) throw ConfigurationError("rkhs_fit: observation count mismatch");
  if (bandwidths.size() != p) throw ConfigurationError("rkhs_fit: one bandwidth per dimension");
  for (double h : bandwidths)
    if (!(h > 0.0)) throw ConfigurationError("rkhs_fit: bandwidths must be positive");
  if (!(nugget >= 0.0)) throw ConfigurationError("rkhs_fit: nugget must be >= 0");
  for (double v : observations)
    if (!std::isfinite(v)) throw ConfigurationError("rkhs_fit: observations must be finite");

  Surrogate s;
  s.kind = SurrogateKind::Rkhs;
  s.design = design;
  s.observations.assign(observations.begin(), observations.end());
  s.bandwidths = std::move(bandwidths);
  s.offset = center ? kahan_mean(observations) : 0.0;

  std::vector<double> inv_h2(p);
  for (std::size_t j = 0; j < p; ++j) inv_h2[j] = 1.0 / (s.bandwidths[j] * s.bandwidths[j]);
  Eigen::MatrixXd gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    gram(a, a) = 1.0;
    for (std::size_t b = a + 1; b < n; ++b)
      gram(a, b) = gram(b, a) = gaussian_kernel(design.points.row(a), design.points.row(b), inv_h2);
  }
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs(i) = observations[i] - s.offset;
  const double rhs_norm = rhs.norm();
  const double mean_diag = 1.0;

  double jitter = nugget;
  while (true) {
    Eigen::MatrixXd system = gram;
    system.diagonal().array() += jitter;
    Eigen::LLT<Eigen::MatrixXd> llt(system);
    if (llt.info() == Eigen::Success) {
      Eigen::VectorXd w = llt.solve(rhs);
      const double residual = (system * w - rhs).norm();
      if (w.allFinite() && residual <= kResidualTolerance * std::max(rhs_norm, 1e-300)) {
        s.nugget = jitter;
        s.weights.assign(w.data(), w.data() + n);
        return s;
      }
      if (rhs_norm == 0.0) {
        s.nugget = jitter;
        s.weights.assign(n, 0.0);
        return s;
      }
    }
    const double next = jitter == 0.0 ? kFirstJitter * mean_diag : jitter * 10.0;
    if (next > kMaxJitter * mean_diag * (1.0 + 1e-9))
      throw ConditioningError(fmt::format(
          "Gram matrix of {} points not factorizable with nugget up to {:g}", n, kMaxJitter * mean_diag));
    jitter = std::max(next, nugget);
  }
}

std::vector<double> median_distance_bandwidths(const Design& design, double scale) {
  const std::size_t n = design.size();
  const std::size_t p = design.dimension();
  if (!(scale > 0.0)) throw ConfigurationError("bandwidth scale must be positive");
  std::vector<double> out(p, scale);
  if (n < 2) return out;
  std::vector<double> diffs;
  diffs.reserve(n * (n - 1) / 2);
  for (std::size_t j = 0; j < p; ++j) {
    diffs.clear();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        diffs.push_back(std::abs(design.points(a, j) - design.points(b, j)));
    auto mid = diffs.begin() + static_cast<std::ptrdiff_t>(diffs.size() / 2);
    std::nth_element(diffs.begin(), mid, diffs.end());
    out[j] = *mid > 0.0 ? scale * *mid : scale;
  }
  return out;
}

}  // namespace pickfreeze
