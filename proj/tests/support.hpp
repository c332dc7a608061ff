#pragma once

// Test-side helpers: small model builders, a random discrete model
// generator, and an enumeration oracle that shares no code with the library.

#include <cmath>
#include <functional>
#include <vector>

#include "pickfreeze/distribution.hpp"
#include "pickfreeze/model.hpp"
#include "pickfreeze/rng.hpp"

namespace testing {

using pickfreeze::InputDistribution;
using pickfreeze::ModelSpec;

inline ModelSpec two_input(std::function<double(double, double)> f, InputDistribution x,
                           InputDistribution z) {
  ModelSpec m;
  m.dimension = 2;
  m.x_indices = {0};
  m.input_laws = {std::move(x), std::move(z)};
  m.evaluate = [f = std::move(f)](std::span<const double> v) { return f(v[0], v[1]); };
  return m;
}

inline InputDistribution coin() { return InputDistribution::discrete({0.0, 1.0}, {0.5, 0.5}); }

/// Random discrete model: p in {2, 3}, 2..5 atoms per input, random
/// probabilities, random frozen block, and an f mixing additive,
/// interaction and non-polynomial terms.
struct RandomDiscreteModel {
  ModelSpec model;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> probs;
  std::vector<double> coef;
};

inline RandomDiscreteModel random_discrete_model(pickfreeze::Rng& rng) {
  RandomDiscreteModel out;
  const std::size_t p = 2 + rng.below(2);
  for (std::size_t j = 0; j < p; ++j) {
    const std::size_t atoms = 2 + rng.below(4);
    std::vector<double> v(atoms), w(atoms);
    double total = 0.0;
    for (std::size_t a = 0; a < atoms; ++a) {
      v[a] = std::round((rng.uniform() * 6.0 - 3.0) * 8.0) / 8.0 + static_cast<double>(a);
      w[a] = 0.1 + rng.uniform();
      total += w[a];
    }
    for (auto& x : w) x /= total;
    // Renormalize the last weight so the sum is 1 to machine precision.
    double head = 0.0;
    for (std::size_t a = 0; a + 1 < atoms; ++a) head += w[a];
    w.back() = 1.0 - head;
    out.values.push_back(v);
    out.probs.push_back(w);
  }
  for (int k = 0; k < 6; ++k) out.coef.push_back(rng.uniform() * 4.0 - 2.0);
  std::vector<InputDistribution> laws;
  for (std::size_t j = 0; j < p; ++j) laws.push_back(InputDistribution::discrete(out.values[j], out.probs[j]));
  std::vector<std::size_t> x;
  while (x.empty() || x.size() == p) {
    x.clear();
    for (std::size_t j = 0; j < p; ++j)
      if (rng.below(2)) x.push_back(j);
  }
  const auto c = out.coef;
  out.model.dimension = p;
  out.model.x_indices = x;
  out.model.input_laws = laws;
  out.model.evaluate = [c, p](std::span<const double> v) {
    double y = c[0] * v[0] + c[1] * v[1] + c[2] * v[0] * v[1] + c[3] * std::sin(v[0] - v[1]);
    if (p > 2) y += c[4] * v[2] * v[2] + c[5] * v[1] * v[2];
    return y;
  };
  return out;
}

/// Var(E(Y|X)) and Var(Y) by direct nested enumeration in long double.
struct ExactMoments {
  long double var_cond;
  long double var_y;
};

inline ExactMoments enumerate_moments(const RandomDiscreteModel& m) {
  const std::size_t p = m.values.size();
  std::vector<std::size_t> idx(p, 0);
  std::vector<bool> frozen(p, false);
  for (auto j : m.model.x_indices) frozen[j] = true;

  // Visit every atom; accumulate E(Y), E(Y^2) and per-X-cell sums.
  std::vector<long double> cell_mass, cell_sum;
  auto cell_of = [&]() {
    std::size_t k = 0;
    for (std::size_t j = 0; j < p; ++j)
      if (frozen[j]) k = k * m.values[j].size() + idx[j];
    return k;
  };
  std::size_t cells = 1;
  for (std::size_t j = 0; j < p; ++j)
    if (frozen[j]) cells *= m.values[j].size();
  cell_mass.assign(cells, 0.0L);
  cell_sum.assign(cells, 0.0L);
  long double ey = 0.0L, ey2 = 0.0L;
  std::vector<double> x(p);
  while (true) {
    long double prob = 1.0L;
    for (std::size_t j = 0; j < p; ++j) {
      x[j] = m.values[j][idx[j]];
      prob *= m.probs[j][idx[j]];
    }
    const long double y = m.model.evaluate(x);
    ey += prob * y;
    ey2 += prob * y * y;
    cell_mass[cell_of()] += prob;
    cell_sum[cell_of()] += prob * y;
    std::size_t j = 0;
    while (j < p && ++idx[j] == m.values[j].size()) idx[j++] = 0;
    if (j == p) break;
  }
  long double econd2 = 0.0L;
  for (std::size_t k = 0; k < cells; ++k)
    if (cell_mass[k] > 0.0L) econd2 += cell_sum[k] * cell_sum[k] / cell_mass[k];
  return {econd2 - ey * ey, ey2 - ey * ey};
}

}  // namespace testing
