#include "pickfreeze/metamodel/decay.hpp"

#include <cmath>
#include <fmt/core.h>
#include <set>
#include <vector>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

namespace {

struct Line {
  double intercept;
  double slope;
  double r2;
};

Line least_squares(std::span<const double> x, std::span<const double> y) {
  const double mx = kahan_mean(x);
  const double my = kahan_mean(y);
  KahanSum sxx, sxy, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy.value() / sxx.value();
  const double r2 = syy.value() > 0.0 ? sxy.value() * sxy.value() / (sxx.value() * syy.value()) : 1.0;
  return {my - slope * mx, slope, r2};
}

std::vector<double> log_variances(std::span<const double> ns, std::span<const double> vars) {
  if (ns.size() != vars.size()) throw ConfigurationError("decay fit: ns and vars differ in length");
  std::set<double> distinct(ns.begin(), ns.end());
  if (distinct.size() < 2) throw ConfigurationError("decay fit needs at least two distinct n");
  std::vector<double> out(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!(vars[i] > 0.0) || !std::isfinite(vars[i]))
      throw DomainError(fmt::format("decay fit: variance {} is not positive", vars[i]));
    if (!(ns[i] > 0.0)) throw DomainError("decay fit: n must be positive");
    out[i] = std::log(vars[i]);
  }
  return out;
}

}  // namespace

double DecayFit::predict(double n) const noexcept {
  if (law == DecayLaw::Exponential) return c * std::exp(-rate * std::pow(n, 1.0 / p));
  return c * std::pow(n, -rate);
}

std::string_view to_string(DecayLaw law) noexcept {
  return law == DecayLaw::Exponential ? "exponential" : "power";
}

DecayFit fit_exponential_decay(std::span<const double> ns, std::span<const double> vars, double p) {
  if (!(p > 0.0)) throw ConfigurationError("decay fit: dimension must be positive");
  const auto ly = log_variances(ns, vars);
  std::vector<double> x(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) x[i] = std::pow(ns[i], 1.0 / p);
  const Line line = least_squares(x, ly);
  return {DecayLaw::Exponential, std::exp(line.intercept), -line.slope, line.r2, p};
}

DecayFit fit_power_decay(std::span<const double> ns, std::span<const double> vars) {
  const auto ly = log_variances(ns, vars);
  std::vector<double> x(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) x[i] = std::log(ns[i]);
  const Line line = least_squares(x, ly);
  return {DecayLaw::Power, std::exp(line.intercept), -line.slope, line.r2, 1.0};
}

double critical_growth_rate(const DecayFit& fit) {
  if (!(fit.rate > 0.0) || !std::isfinite(fit.rate))
    throw DomainError(fmt::format("no finite critical rate: fitted rate is {}", fit.rate));
  return 1.0 / fit.rate;
}

}  // namespace pickfreeze
