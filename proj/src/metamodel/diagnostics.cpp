#include "pickfreeze/metamodel/diagnostics.hpp"

#include <cmath>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/sampling.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

namespace {

double empirical_variance(std::span<const double> v) {
  const double mean = kahan_mean(v);
  KahanSum ss;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss.value() / static_cast<double>(v.size());
}

double covariance(std::span<const double> a, std::span<const double> b) {
  const double ma = kahan_mean(a);
  const double mb = kahan_mean(b);
  KahanSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - ma) * (b[i] - mb);
  return s.value() / static_cast<double>(a.size());
}

double correlation(std::span<const double> a, std::span<const double> b, double var_a,
                   double var_b) {
  return covariance(a, b) / std::sqrt(var_a * var_b);
}

}  // namespace

double estimate_error_variance(const ModelSpec& base, const ModelSpec& approx, std::size_t n_test,
                               const RngStream& rng) {
  if (n_test < 2) throw ConfigurationError("error variance needs n_test >= 2");
  const Matrix inputs = sample_inputs(base.input_laws, n_test, rng.substream(0));
  const RngStream noise = rng.substream(1);
  std::vector<double> delta(n_test);
  for (std::size_t i = 0; i < n_test; ++i) {
    Rng engine = noise.substream(i).engine();
    const auto x = inputs.row(i);
    delta[i] = approx.observe(x, engine) - base.evaluate(x);
  }
  return empirical_variance(delta);
}

double estimate_error_variance(const ModelSpec& base, const Surrogate& surrogate,
                               std::size_t n_test, const RngStream& rng) {
  if (n_test < 2) throw ConfigurationError("error variance needs n_test >= 2");
  const Matrix inputs = sample_inputs(base.input_laws, n_test, rng.substream(0));
  const auto approx = surrogate.predict_batch(inputs);
  std::vector<double> delta(n_test);
  for (std::size_t i = 0; i < n_test; ++i) delta[i] = approx[i] - base.evaluate(inputs.row(i));
  return empirical_variance(delta);
}

double c_delta_estimate(std::span<const double> y, std::span<const double> y_x,
                        std::span<const double> delta, std::span<const double> delta_x) {
  const std::size_t n = y.size();
  if (y_x.size() != n || delta.size() != n || delta_x.size() != n)
    throw ConfigurationError("c_delta_estimate: arrays differ in length");
  if (n < 2) throw ConfigurationError("c_delta_estimate needs at least two entries");
  const double var_y = empirical_variance(y);
  if (!(var_y > 0.0)) throw DegenerateError("c_delta_estimate: empirical Var(Y) is zero");
  const double var_d = empirical_variance(delta);
  if (!(var_d > 0.0)) return 0.0;
  const double var_yx = empirical_variance(y_x);
  const double var_dx = empirical_variance(delta_x);
  const double corr_y_yx = var_yx > 0.0 ? correlation(y, y_x, var_y, var_yx) : 0.0;
  const double corr_y_dx = var_dx > 0.0 ? correlation(y, delta_x, var_y, var_dx) : 0.0;
  const double corr_y_d = correlation(y, delta, var_y, var_d);
  const double corr_d_dx = var_dx > 0.0 ? correlation(delta, delta_x, var_d, var_dx) : 0.0;
  return 2.0 * std::sqrt(var_y) * (corr_y_dx - corr_y_yx * corr_y_d) +
         std::sqrt(var_d) * (corr_d_dx - corr_y_yx);
}

}  // namespace pickfreeze
