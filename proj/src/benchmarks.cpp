#include "pickfreeze/benchmarks.hpp"

#include <cmath>
#include <numbers>

#include "pickfreeze/errors.hpp"

namespace pickfreeze {

double ishigami(std::span<const double> x) noexcept {
  const double s1 = std::sin(x[0]);
  const double s2 = std::sin(x[1]);
  const double x3_2 = x[2] * x[2];
  return s1 + kIshigamiA * s2 * s2 + kIshigamiB * x3_2 * x3_2 * s1;
}

double ishigami_variance() noexcept {
  constexpr double pi = std::numbers::pi;
  constexpr double a = kIshigamiA, b = kIshigamiB;
  const double pi4 = std::pow(pi, 4), pi8 = std::pow(pi, 8);
  return a * a / 8.0 + b * pi4 / 5.0 + b * b * pi8 / 18.0 + 0.5;
}

std::array<double, 3> ishigami_exact_indices() noexcept {
  constexpr double pi = std::numbers::pi;
  constexpr double a = kIshigamiA, b = kIshigamiB;
  const double t = 1.0 + b * std::pow(pi, 4) / 5.0;
  const double v1 = 0.5 * t * t;
  const double v2 = a * a / 8.0;
  const double v = ishigami_variance();
  return {v1 / v, v2 / v, 0.0};
}

RegisteredModel ishigami_model() {
  constexpr double pi = std::numbers::pi;
  const auto s = ishigami_exact_indices();
  RegisteredModel m;
  m.name = "ishigami";
  m.model.dimension = 3;
  m.model.x_indices = {0};
  m.model.input_laws.assign(3, InputDistribution::uniform(-pi, pi));
  m.model.evaluate = [](std::span<const double> x) { return ishigami(x); };
  m.blocks = {{"x1", {0}, s[0]}, {"x2", {1}, s[1]}, {"x3", {2}, s[2]}};
  return m;
}

RegisteredModel linear_gaussian(double a, double b) {
  if (a == 0.0 && b == 0.0) throw DegenerateError("linear-gaussian with a = b = 0 has zero variance");
  RegisteredModel m;
  m.name = "linear-gaussian";
  m.model.dimension = 2;
  m.model.x_indices = {0};
  m.model.input_laws.assign(2, InputDistribution::standard_normal());
  m.model.evaluate = [a, b](std::span<const double> x) { return a * x[0] + b * x[1]; };
  const double total = a * a + b * b;
  m.blocks = {{"x", {0}, a * a / total}, {"z", {1}, b * b / total}};
  return m;
}

RegisteredModel bernoulli_sum() {
  RegisteredModel m;
  m.name = "bernoulli-sum";
  m.model.dimension = 2;
  m.model.x_indices = {0};
  m.model.input_laws.assign(2, InputDistribution::discrete({0.0, 1.0}, {0.5, 0.5}));
  m.model.evaluate = [](std::span<const double> x) { return x[0] + x[1]; };
  m.blocks = {{"x", {0}, 0.5}, {"z", {1}, 0.5}};
  return m;
}

}  // namespace pickfreeze
