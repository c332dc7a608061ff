#include "pickfreeze/metamodel/nadaraya_watson.hpp"

#include <cmath>
#include <fmt/core.h>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

namespace {

constexpr double kKernelCutoff = 745.2;

void check_bandwidths(std::span<const double> h, std::size_t p) {
  if (h.size() != p) throw ConfigurationError("one bandwidth per dimension is required");
  for (double v : h)
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigurationError("bandwidths must be positive");
}

double squared_scaled_distance(std::span<const double> a, std::span<const double> b,
                               std::span<const double> inv_h2) noexcept {
  double q = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double t = a[j] - b[j];
    q += t * t * inv_h2[j];
  }
  return q;
}

// LOO mean squared error for every multiplier in `grid`, sharing the pair
// distances computed at the base bandwidths.
std::vector<double> loo_errors(const Design& design, std::span<const double> obs,
                               std::span<const double> base, std::span<const double> grid) {
  const std::size_t n = design.size();
  const std::size_t g = grid.size();
  std::vector<double> inv_base(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) inv_base[j] = 1.0 / (base[j] * base[j]);
  std::vector<double> inv_m2(g);
  for (std::size_t k = 0; k < g; ++k) inv_m2[k] = 1.0 / (grid[k] * grid[k]);

  std::vector<double> num(g * n, 0.0);
  std::vector<double> den(g * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row_a = design.points.row(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const double q = squared_scaled_distance(row_a, design.points.row(b), inv_base);
      for (std::size_t k = 0; k < g; ++k) {
        const double t = q * inv_m2[k];
        if (t >= kKernelCutoff) continue;
        const double w = std::exp(-t);
        num[k * n + a] += w * obs[b];
        den[k * n + a] += w;
        num[k * n + b] += w * obs[a];
        den[k * n + b] += w;
      }
    }
  }
  std::vector<double> errors(g);
  for (std::size_t k = 0; k < g; ++k) {
    KahanSum sum;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = den[k * n + i];
      const double pred = d > 0.0 ? num[k * n + i] / d : 0.0;
      const double r = pred - obs[i];
      sum += r * r;
    }
    errors[k] = sum.value() / static_cast<double>(n);
  }
  return errors;
}

}  // namespace

Surrogate nw_fit(const Design& design, std::span<const double> noisy_observations,
                 std::vector<double> bandwidths) {
  if (design.size() < 1) throw ConfigurationError("nw_fit needs at least one design point");
  if (noisy_observations.size() != design.size())
    throw ConfigurationError("nw_fit: observation count mismatch");
  check_bandwidths(bandwidths, design.dimension());
  Surrogate s;
  s.kind = SurrogateKind::NadarayaWatson;
  s.design = design;
  s.observations.assign(noisy_observations.begin(), noisy_observations.end());
  s.bandwidths = std::move(bandwidths);
  return s;
}

double nw_eval(const Surrogate& s, std::span<const double> u) {
  const std::size_t p = s.bandwidths.size();
  double inv_h2_buf[16];
  std::vector<double> heap;
  double* inv_h2 = inv_h2_buf;
  if (p > 16) {
    heap.resize(p);
    inv_h2 = heap.data();
  }
  for (std::size_t j = 0; j < p; ++j) inv_h2[j] = 1.0 / (s.bandwidths[j] * s.bandwidths[j]);
  const std::span<const double> inv{inv_h2, p};
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < s.design.size(); ++i) {
    const double q = squared_scaled_distance(u, s.design.points.row(i), inv);
    if (q >= kKernelCutoff) continue;
    const double w = std::exp(-q);
    num += w * s.observations[i];
    den += w;
  }
  return den > 0.0 ? num / den : 0.0;
}

std::vector<double> nw_rule_of_thumb(const Design& design) {
  const std::size_t n = design.size();
  const std::size_t p = design.dimension();
  if (n < 2) throw ConfigurationError("rule of thumb needs at least two design points");
  std::vector<double> sd(p);
  std::vector<double> column(n);
  double positive_sum = 0.0;
  std::size_t positive = 0;
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = design.points(i, j);
    const double mean = kahan_mean(column);
    KahanSum ss;
    for (double v : column) ss += (v - mean) * (v - mean);
    sd[j] = std::sqrt(ss.value() / static_cast<double>(n));
    if (sd[j] > 0.0) {
      positive_sum += sd[j];
      ++positive;
    }
  }
  if (positive == 0) throw DomainError("all design points are identical");
  // A constant coordinate carries no scale; borrow the mean of the others.
  const double fallback = positive_sum / static_cast<double>(positive);
  const double factor = std::pow(static_cast<double>(n), -1.0 / (static_cast<double>(p) + 4.0));
  for (double& v : sd) v = (v > 0.0 ? v : fallback) * factor;
  return sd;
}

double nw_loo_error(const Design& design, std::span<const double> obs,
                    std::span<const double> bandwidths) {
  if (obs.size() != design.size()) throw ConfigurationError("nw_loo_error: observation count mismatch");
  check_bandwidths(bandwidths, design.dimension());
  const double one = 1.0;
  return loo_errors(design, obs, bandwidths, {&one, 1})[0];
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo)) throw ConfigurationError("log_grid needs 0 < lo <= hi");
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) out[k] = lo * std::exp(step * static_cast<double>(k));
  out.back() = hi;
  return out;
}

BandwidthSearch search_bandwidth_nw(const Design& design, std::span<const double> obs,
                                    std::span<const double> grid) {
  if (design.size() < 4) throw ConfigurationError("bandwidth selection needs n >= 4");
  if (grid.empty()) throw ConfigurationError("bandwidth grid is empty");
  if (obs.size() != design.size()) throw ConfigurationError("observation count mismatch");
  for (double m : grid)
    if (!(m > 0.0)) throw ConfigurationError("bandwidth grid multipliers must be positive");
  const auto base = nw_rule_of_thumb(design);
  BandwidthSearch out;
  out.loo_errors = loo_errors(design, obs, base, grid);
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (out.loo_errors[k] < out.loo_errors[out.best_index]) out.best_index = k;
  out.bandwidths = base;
  for (double& h : out.bandwidths) h *= grid[out.best_index];
  return out;
}

std::vector<double> select_bandwidth_nw(const Design& design, std::span<const double> obs,
                                        std::span<const double> grid) {
  return search_bandwidth_nw(design, obs, grid).bandwidths;
}

}  // namespace pickfreeze
