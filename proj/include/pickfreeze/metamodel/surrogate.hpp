#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "pickfreeze/metamodel/design.hpp"
#include "pickfreeze/model.hpp"

namespace pickfreeze {

enum class SurrogateKind { Rkhs, NadarayaWatson };

/// Trained kernel surrogate; immutable after fitting and safe to evaluate
/// concurrently. The kernel is exp(-sum_j (u_j - d_j)^2 / h_j^2).
struct Surrogate {
  SurrogateKind kind = SurrogateKind::Rkhs;
  Design design;
  std::vector<double> observations;
  std::vector<double> bandwidths;
  double nugget = 0.0;  // rkhs only
  double offset = 0.0;  // rkhs only: constant trend removed before the solve, or 0
  std::vector<double> weights;  // rkhs only

  double predict(std::span<const double> u) const;

  /// Row-wise predictions; OpenMP over rows.
  std::vector<double> predict_batch(const Matrix& points) const;
  std::vector<double> predict_batch_serial(const Matrix& points) const;

  /// Wraps the surrogate as a deterministic model with the base model's
  /// input laws and frozen block.
  ModelSpec as_model(const ModelSpec& base) const;
};

double gaussian_kernel(std::span<const double> u, std::span<const double> d,
                       std::span<const double> inv_h2) noexcept;

/// Writes the version-tagged text container (see README). Values are
/// printed with 17 significant digits so reading back is exact.
void write_surrogate(std::ostream& out, const Surrogate& s);
/// Throws ConfigurationError on malformed input or unknown version.
Surrogate read_surrogate(std::istream& in);

}  // namespace pickfreeze
