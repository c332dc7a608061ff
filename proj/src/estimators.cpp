#include "pickfreeze/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <fmt/core.h>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

std::string_view to_string(EstimatorKind kind) noexcept { return kind == EstimatorKind::S ? "S" : "T"; }

EstimatorKind parse_estimator_kind(std::string_view text) {
  if (text == "s" || text == "S") return EstimatorKind::S;
  if (text == "t" || text == "T") return EstimatorKind::T;
  throw ConfigurationError(fmt::format("unknown estimator '{}' (expected s or t)", text));
}

namespace {

void check_sample(const PickFreezeSample& sample) {
  if (sample.y.size() != sample.y_x.size() || sample.y.size() < 2)
    throw ConfigurationError("estimators need two equal-length arrays with n >= 2");
}

/// Empirical (1/n) variance of a sequence given by `term(i)`, two-pass.
template <class Term>
double empirical_variance(std::size_t n, Term term) {
  KahanSum mean;
  for (std::size_t i = 0; i < n; ++i) mean += term(i);
  const double m = mean.value() / static_cast<double>(n);
  KahanSum ss;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = term(i) - m;
    ss += d * d;
  }
  return ss.value() / static_cast<double>(n);
}

}  // namespace

SobolEstimate estimate_s(const PickFreezeSample& sample) {
  check_sample(sample);
  const std::size_t n = sample.size();
  const auto& y = sample.y;
  const auto& y_x = sample.y_x;
  const double mean_y = kahan_mean(y);
  const double mean_yx = kahan_mean(y_x);

  KahanSum cross, var_y;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = y[i] - mean_y;
    cross += a * (y_x[i] - mean_yx);
    var_y += a * a;
  }
  if (var_y.value() == 0.0) throw DegenerateError("empirical variance of Y is zero");
  const double value = cross.value() / var_y.value();
  const double v = var_y.value() / static_cast<double>(n);

  // V_i = (Y_i - Ybar) [(Y_i^X - Ybar^X) - S (Y_i - Ybar)]
  const double var_v = empirical_variance(n, [&](std::size_t i) {
    const double a = y[i] - mean_y;
    return a * ((y_x[i] - mean_yx) - value * a);
  });
  return {EstimatorKind::S, value, var_v / (v * v), n};
}

SobolEstimate estimate_t(const PickFreezeSample& sample) {
  check_sample(sample);
  const std::size_t n = sample.size();
  const auto& y = sample.y;
  const auto& y_x = sample.y_x;
  const double pooled_mean = 0.5 * (kahan_mean(y) + kahan_mean(y_x));

  KahanSum cross, pooled;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = y[i] - pooled_mean;
    const double b = y_x[i] - pooled_mean;
    cross += a * b;
    pooled += 0.5 * (a * a + b * b);
  }
  if (pooled.value() == 0.0) throw DegenerateError("pooled empirical variance of (Y, Y^X) is zero");
  const double value = cross.value() / pooled.value();
  const double v = pooled.value() / static_cast<double>(n);

  // W_i = (Y_i - m)(Y_i^X - m) - (T/2) [(Y_i - m)^2 + (Y_i^X - m)^2]
  const double var_w = empirical_variance(n, [&](std::size_t i) {
    const double a = y[i] - pooled_mean;
    const double b = y_x[i] - pooled_mean;
    return a * b - 0.5 * value * (a * a + b * b);
  });
  return {EstimatorKind::T, value, var_w / (v * v), n};
}

SobolEstimate estimate(const PickFreezeSample& sample, EstimatorKind kind) {
  return kind == EstimatorKind::S ? estimate_s(sample) : estimate_t(sample);
}

double estimate_s_naive(const PickFreezeSample& sample) {
  check_sample(sample);
  const double n = static_cast<double>(sample.size());
  double sy = 0, syx = 0, syy = 0, sy2 = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    sy += sample.y[i];
    syx += sample.y_x[i];
    syy += sample.y[i] * sample.y_x[i];
    sy2 += sample.y[i] * sample.y[i];
  }
  return (syy / n - (sy / n) * (syx / n)) / (sy2 / n - (sy / n) * (sy / n));
}

double estimate_t_naive(const PickFreezeSample& sample) {
  check_sample(sample);
  const double n = static_cast<double>(sample.size());
  double sm = 0, syy = 0, sq = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    sm += 0.5 * (sample.y[i] + sample.y_x[i]);
    syy += sample.y[i] * sample.y_x[i];
    sq += 0.5 * (sample.y[i] * sample.y[i] + sample.y_x[i] * sample.y_x[i]);
  }
  const double m = sm / n;
  return (syy / n - m * m) / (sq / n - m * m);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError(fmt::format("normal_quantile needs p in (0,1), got {}", p));
  // 1 - p is exact for p >= 1/2, so the upper half maps onto the lower tail.
  if (p > 0.5) return -normal_quantile(1.0 - p);

  // Acklam's rational approximation (relative error ~1e-9), then one Halley
  // step against the erfc-based CDF.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }

  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

ConfidenceInterval confidence_interval(const SobolEstimate& est, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ConfigurationError(fmt::format("alpha must lie in (0,1), got {}", alpha));
  if (est.n < 2) throw ConfigurationError("confidence interval needs n >= 2");
  if (!(est.sigma2 >= 0.0)) throw ConfigurationError("asymptotic variance must be >= 0");
  const double z = normal_quantile(1.0 - alpha / 2.0);
  const double half = z * std::sqrt(est.sigma2 / static_cast<double>(est.n));
  return {est.value - half, est.value + half, 1.0 - alpha};
}

ConfidenceInterval clip_unit(const ConfidenceInterval& ci) noexcept {
  return {std::clamp(ci.lower, 0.0, 1.0), std::clamp(ci.upper, 0.0, 1.0), ci.level};
}

}  // namespace pickfreeze
