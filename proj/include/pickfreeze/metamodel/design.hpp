#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pickfreeze/distribution.hpp"
#include "pickfreeze/rng.hpp"
#include "pickfreeze/sampling.hpp"

namespace pickfreeze {

struct Interval {
  double lo;
  double hi;
};

enum class DesignKind { MaximinLhs, Iid };

struct Design {
  Matrix points;
  DesignKind kind = DesignKind::Iid;
  std::vector<Interval> bounds;

  std::size_t size() const noexcept { return points.rows; }
  std::size_t dimension() const noexcept { return points.cols; }
};

/// Latin hypercube with every point at the center of its stratum cell.
Design centered_lhs(std::size_t n, std::span<const Interval> bounds, const RngStream& rng);

/// Centered LHS improved by random within-column swaps. A swap is kept only
/// when it increases the minimum pairwise distance, or keeps it and reduces
/// the number of pairs attaining it; the minimum distance is therefore
/// non-decreasing in `iters`. When `trace` is given it receives the minimum
/// distance after every iteration.
Design maximin_lhs(std::size_t n, std::span<const Interval> bounds, const RngStream& rng,
                   std::size_t iters, std::vector<double>* trace = nullptr);

/// n i.i.d. draws from the input laws.
Design iid_design(std::size_t n, std::span<const InputDistribution> laws, const RngStream& rng);

/// Each coordinate's values occupy distinct equal-width strata of its range.
bool is_latin_hypercube(const Design& design);

double min_pairwise_distance(const Matrix& points);

/// max over probe points of the distance to the nearest design point.
/// Throws DomainError for an empty design or probe set.
double fill_distance(const Design& design, const Matrix& probe);

/// Bounds of the support of uniform laws; throws ConfigurationError for
/// unbounded laws.
std::vector<Interval> support_bounds(std::span<const InputDistribution> laws);

}  // namespace pickfreeze
