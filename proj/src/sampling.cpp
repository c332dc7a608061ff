#include "pickfreeze/sampling.hpp"

#include <fmt/core.h>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/parallel.hpp"

namespace pickfreeze {

PickFreezeSample::PickFreezeSample(std::vector<double> y_in, std::vector<double> y_x_in)
    : y(std::move(y_in)), y_x(std::move(y_x_in)) {
  if (y.size() != y_x.size())
    throw ConfigurationError(fmt::format("pick-freeze arrays differ in length ({} vs {})", y.size(), y_x.size()));
  if (y.size() < 2) throw ConfigurationError("pick-freeze sample needs at least 2 pairs");
}

namespace {

void draw_row(std::span<const InputDistribution> laws, Rng& rng, std::span<double> out) {
  for (std::size_t j = 0; j < laws.size(); ++j) out[j] = laws[j].sample(rng);
}

struct PairDraw {
  std::vector<double> x;
  std::vector<double> x_prime;
  std::vector<std::size_t> z;

  explicit PairDraw(const ModelSpec& model)
      : x(model.dimension), x_prime(model.dimension), z(model.z_indices()) {}

  // Draws (X, Z) and Z' from row i's stream and evaluates both outputs.
  std::pair<double, double> run(const ModelSpec& model, const RngStream& rng, std::size_t i) {
    Rng engine = rng.substream(i).engine();
    draw_row(model.input_laws, engine, x);
    x_prime = x;
    for (std::size_t j : z) x_prime[j] = model.input_laws[j].sample(engine);
    const double y = model.observe(x, engine);
    const double y_x = model.observe(x_prime, engine);
    return {y, y_x};
  }
};

void check_pick_freeze(const ModelSpec& model, std::size_t n) {
  model.validate();
  if (n < 2) throw ConfigurationError("pick-freeze sampling needs n >= 2");
}

}  // namespace

Matrix sample_inputs(std::span<const InputDistribution> laws, std::size_t n, const RngStream& rng) {
  if (n < 1) throw ConfigurationError("sample_inputs needs n >= 1");
  Matrix out(n, laws.size());
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(resolve_workers(0))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Rng engine = rng.substream(static_cast<std::size_t>(i)).engine();
    draw_row(laws, engine, out.row(static_cast<std::size_t>(i)));
  }
  return out;
}

Matrix sample_inputs_serial(std::span<const InputDistribution> laws, std::size_t n,
                            const RngStream& rng) {
  if (n < 1) throw ConfigurationError("sample_inputs needs n >= 1");
  Matrix out(n, laws.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rng engine = rng.substream(i).engine();
    draw_row(laws, engine, out.row(i));
  }
  return out;
}

PickFreezeSample sample_pick_freeze(const ModelSpec& model, std::size_t n, const RngStream& rng) {
  check_pick_freeze(model, n);
  std::vector<double> y(n), y_x(n);
  FirstException failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel num_threads(resolve_workers(0))
  {
    PairDraw draw(model);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const auto row = static_cast<std::size_t>(i);
      try {
        std::tie(y[row], y_x[row]) = draw.run(model, rng, row);
      } catch (...) {
        failure.capture(row);
      }
    }
  }
  failure.rethrow_if_any();
  return {std::move(y), std::move(y_x)};
}

PickFreezeSample sample_pick_freeze_serial(const ModelSpec& model, std::size_t n,
                                           const RngStream& rng) {
  check_pick_freeze(model, n);
  std::vector<double> y(n), y_x(n);
  PairDraw draw(model);
  for (std::size_t i = 0; i < n; ++i) std::tie(y[i], y_x[i]) = draw.run(model, rng, i);
  return {std::move(y), std::move(y_x)};
}

}  // namespace pickfreeze
