#pragma once

#include <cstddef>
#include <string_view>

#include "pickfreeze/sampling.hpp"

namespace pickfreeze {

/// S: Cov(Y, Y^X) / Var(Y) from separate means.
/// T: the pooled estimator using both halves of the sample for mean and variance.
enum class EstimatorKind { S, T };

std::string_view to_string(EstimatorKind kind) noexcept;
/// Accepts "s"/"S"/"t"/"T"; throws ConfigurationError otherwise.
EstimatorKind parse_estimator_kind(std::string_view text);

/// Point estimate of a first-order/closed Sobol index with its plug-in
/// asymptotic variance. `value` can fall outside [0, 1] on finite samples and
/// is reported as-is.
struct SobolEstimate {
  EstimatorKind kind = EstimatorKind::S;
  double value = 0.0;
  double sigma2 = 0.0;  // asymptotic variance of sqrt(n) (value - S)
  std::size_t n = 0;
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.0;

  double length() const noexcept { return upper - lower; }
  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// Centered two-pass computation with compensated sums. Throws
/// DegenerateError when the empirical variance of y is zero.
SobolEstimate estimate_s(const PickFreezeSample& sample);

/// Pooled-moment estimator. Throws DegenerateError when the pooled empirical
/// variance is zero.
SobolEstimate estimate_t(const PickFreezeSample& sample);

SobolEstimate estimate(const PickFreezeSample& sample, EstimatorKind kind);

/// Raw-moment evaluation (sum of products minus product of sums, plain
/// summation). Kept only as a reference for round-off comparisons.
double estimate_s_naive(const PickFreezeSample& sample);
double estimate_t_naive(const PickFreezeSample& sample);

/// Inverse standard normal CDF, absolute error below 1e-8 on (0, 1).
/// Throws DomainError outside (0, 1).
double normal_quantile(double p);

/// value -/+ z_{1-alpha/2} sqrt(sigma2 / n). No clipping to [0, 1].
/// Throws ConfigurationError for alpha outside (0,1), n < 2 or sigma2 < 0.
ConfidenceInterval confidence_interval(const SobolEstimate& est, double alpha);

/// Intersection with [0, 1]; for display only.
ConfidenceInterval clip_unit(const ConfidenceInterval& ci) noexcept;

}  // namespace pickfreeze
