#pragma once

#include <span>
#include <vector>

#include "pickfreeze/metamodel/surrogate.hpp"

namespace pickfreeze {

/// Stores the learning sample; throws ConfigurationError for non-positive
/// bandwidths or mismatched sizes.
Surrogate nw_fit(const Design& design, std::span<const double> noisy_observations,
                 std::vector<double> bandwidths);

/// Kernel-weighted mean of the observations; 0 when every kernel weight
/// underflows.
double nw_eval(const Surrogate& s, std::span<const double> u);

/// h_j = sd_j n^(-1/(p+4)).
std::vector<double> nw_rule_of_thumb(const Design& design);

/// Leave-one-out mean squared prediction error at the given bandwidths.
double nw_loo_error(const Design& design, std::span<const double> obs,
                    std::span<const double> bandwidths);

/// `count` multipliers log-spaced on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Leave-one-out least-squares CV over rule_of_thumb * m for m in `grid`.
/// Returns the minimizing bandwidths. Throws DomainError when every design
/// coordinate is constant and ConfigurationError when n < 4 or the grid is
/// empty.
std::vector<double> select_bandwidth_nw(const Design& design, std::span<const double> obs,
                                        std::span<const double> grid);

/// Same selection, also reporting the LOO error at every grid point.
struct BandwidthSearch {
  std::vector<double> bandwidths;
  std::size_t best_index = 0;
  std::vector<double> loo_errors;
};
BandwidthSearch search_bandwidth_nw(const Design& design, std::span<const double> obs,
                                    std::span<const double> grid);

}  // namespace pickfreeze
