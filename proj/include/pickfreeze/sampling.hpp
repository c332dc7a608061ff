#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pickfreeze/distribution.hpp"
#include "pickfreeze/model.hpp"
#include "pickfreeze/rng.hpp"

namespace pickfreeze {

/// Row-major n x p matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Paired outputs (Y_i, Y_i^X) of the pick-freeze scheme.
struct PickFreezeSample {
  std::vector<double> y;
  std::vector<double> y_x;

  PickFreezeSample() = default;
  /// Throws ConfigurationError unless sizes match and are >= 2.
  PickFreezeSample(std::vector<double> y, std::vector<double> y_x);

  std::size_t size() const noexcept { return y.size(); }
};

/// n independent draws of the input vector. Row i depends only on
/// rng.substream(i).
Matrix sample_inputs(std::span<const InputDistribution> laws, std::size_t n,
                     const RngStream& rng);
Matrix sample_inputs_serial(std::span<const InputDistribution> laws, std::size_t n,
                            const RngStream& rng);

/// Draws X_i shared between (X_i, Z_i) and (X_i, Z_i'), and returns the two
/// model outputs. Pair i depends only on rng.substream(i), so the OpenMP and
/// serial versions return bit-identical arrays.
PickFreezeSample sample_pick_freeze(const ModelSpec& model, std::size_t n, const RngStream& rng);
PickFreezeSample sample_pick_freeze_serial(const ModelSpec& model, std::size_t n,
                                           const RngStream& rng);

}  // namespace pickfreeze
