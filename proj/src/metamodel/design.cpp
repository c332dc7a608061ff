#include "pickfreeze/metamodel/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pickfreeze/errors.hpp"

namespace pickfreeze {

namespace {

/// Per-column random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::vector<std::size_t>> random_ranks(std::size_t n, std::size_t p, Rng& rng) {
  std::vector<std::vector<std::size_t>> ranks(p, std::vector<std::size_t>(n));
  for (auto& col : ranks) {
    std::iota(col.begin(), col.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(col[i - 1], col[rng.below(i)]);
  }
  return ranks;
}

Design from_ranks(const std::vector<std::vector<std::size_t>>& ranks, std::size_t n,
                  std::span<const Interval> bounds, DesignKind kind) {
  Design d;
  d.kind = kind;
  d.bounds.assign(bounds.begin(), bounds.end());
  d.points = Matrix(n, bounds.size());
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    const double width = (bounds[j].hi - bounds[j].lo) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
      d.points(i, j) = bounds[j].lo + (static_cast<double>(ranks[j][i]) + 0.5) * width;
  }
  return d;
}

void check_bounds(std::span<const Interval> bounds) {
  if (bounds.empty()) throw ConfigurationError("design needs at least one dimension");
  for (const auto& b : bounds)
    if (!(b.lo < b.hi)) throw ConfigurationError("design bounds need lo < hi");
}

}  // namespace

Design centered_lhs(std::size_t n, std::span<const Interval> bounds, const RngStream& rng) {
  if (n < 1) throw ConfigurationError("design size must be >= 1");
  check_bounds(bounds);
  Rng engine = rng.engine();
  return from_ranks(random_ranks(n, bounds.size(), engine), n, bounds, DesignKind::MaximinLhs);
}

Design maximin_lhs(std::size_t n, std::span<const Interval> bounds, const RngStream& rng,
                   std::size_t iters, std::vector<double>* trace) {
  if (n < 1) throw ConfigurationError("design size must be >= 1");
  check_bounds(bounds);
  const std::size_t p = bounds.size();
  Rng engine = rng.engine();
  auto ranks = random_ranks(n, p, engine);
  if (trace) trace->clear();
  if (n < 3) {
    // Every swap leaves the single pairwise distance unchanged.
    Design d = from_ranks(ranks, n, bounds, DesignKind::MaximinLhs);
    if (trace) trace->assign(iters, n < 2 ? 0.0 : min_pairwise_distance(d.points));
    return d;
  }

  std::vector<double> w2(p);
  for (std::size_t j = 0; j < p; ++j) {
    const double w = (bounds[j].hi - bounds[j].lo) / static_cast<double>(n);
    w2[j] = w * w;
  }
  // Squared distances computed from integer rank offsets, so equal offset
  // patterns give bit-identical values and ties are exact.
  auto dist2 = [&](std::size_t a, std::size_t b) {
    double s = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double k = static_cast<double>(ranks[j][a]) - static_cast<double>(ranks[j][b]);
      s += w2[j] * k * k;
    }
    return s;
  };

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) dist[a * n + b] = dist[b * n + a] = dist2(a, b);

  struct Criterion {
    double min;
    std::size_t count;
  };
  auto better = [](const Criterion& c, const Criterion& cur) {
    return c.min > cur.min || (c.min == cur.min && c.count < cur.count);
  };
  auto tally = [](Criterion& c, double v) {
    if (v < c.min) {
      c.min = v;
      c.count = 1;
    } else if (v == c.min) {
      ++c.count;
    }
  };
  Criterion current{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) tally(current, dist[a * n + b]);

  std::vector<double> row_a(n), row_b(n);
  for (std::size_t it = 0; it < iters; ++it) {
    const std::size_t j = engine.below(p);
    const std::size_t a = engine.below(n);
    std::size_t b = engine.below(n - 1);
    if (b >= a) ++b;

    std::swap(ranks[j][a], ranks[j][b]);
    for (std::size_t k = 0; k < n; ++k) {
      row_a[k] = dist2(a, k);
      row_b[k] = dist2(b, k);
    }
    Criterion cand{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t k = 0; k < n; ++k) {
      if (k == a || k == b) continue;
      const double* row = &dist[k * n];
      for (std::size_t l = k + 1; l < n; ++l)
        if (l != a && l != b) tally(cand, row[l]);
      tally(cand, row_a[k]);
      tally(cand, row_b[k]);
    }
    tally(cand, row_a[b]);

    if (better(cand, current)) {
      current = cand;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != a) dist[a * n + k] = dist[k * n + a] = row_a[k];
        if (k != b) dist[b * n + k] = dist[k * n + b] = row_b[k];
      }
    } else {
      std::swap(ranks[j][a], ranks[j][b]);
    }
    if (trace) trace->push_back(std::sqrt(current.min));
  }
  return from_ranks(ranks, n, bounds, DesignKind::MaximinLhs);
}

Design iid_design(std::size_t n, std::span<const InputDistribution> laws, const RngStream& rng) {
  if (n < 1) throw ConfigurationError("design size must be >= 1");
  Design d;
  d.kind = DesignKind::Iid;
  d.points = sample_inputs_serial(laws, n, rng);
  try {
    d.bounds = support_bounds(laws);
  } catch (const ConfigurationError&) {
    d.bounds.clear();
  }
  return d;
}

bool is_latin_hypercube(const Design& design) {
  const std::size_t n = design.size();
  if (design.bounds.size() != design.dimension()) return false;
  for (std::size_t j = 0; j < design.dimension(); ++j) {
    const auto [lo, hi] = design.bounds[j];
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = (design.points(i, j) - lo) / (hi - lo) * static_cast<double>(n);
      if (!(u >= 0.0 && u < static_cast<double>(n))) return false;
      const auto cell = static_cast<std::size_t>(u);
      if (seen[cell]) return false;
      seen[cell] = true;
    }
  }
  return true;
}

double min_pairwise_distance(const Matrix& points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < points.rows; ++a)
    for (std::size_t b = a + 1; b < points.rows; ++b) {
      double s = 0.0;
      for (std::size_t j = 0; j < points.cols; ++j) {
        const double d = points(a, j) - points(b, j);
        s += d * d;
      }
      best = std::min(best, s);
    }
  return std::sqrt(best);
}

double fill_distance(const Design& design, const Matrix& probe) {
  if (design.size() == 0) throw DomainError("fill distance of an empty design");
  if (probe.rows == 0) throw DomainError("fill distance needs a nonempty probe set");
  if (probe.cols != design.dimension()) throw ConfigurationError("probe dimension mismatch");
  double worst = 0.0;
  for (std::size_t q = 0; q < probe.rows; ++q) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < design.size(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < probe.cols; ++j) {
        const double d = probe(q, j) - design.points(i, j);
        s += d * d;
      }
      nearest = std::min(nearest, s);
    }
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

std::vector<Interval> support_bounds(std::span<const InputDistribution> laws) {
  std::vector<Interval> out;
  for (const auto& law : laws) {
    if (const auto* u = std::get_if<Uniform>(&law.kind())) {
      out.push_back({u->lo, u->hi});
    } else if (const auto* d = std::get_if<Discrete>(&law.kind())) {
      const auto [lo, hi] = std::minmax_element(d->values.begin(), d->values.end());
      if (!(*lo < *hi)) throw ConfigurationError("point-mass law has a degenerate range");
      out.push_back({*lo, *hi});
    } else {
      throw ConfigurationError("space-filling designs need bounded (uniform or discrete) input laws");
    }
  }
  return out;
}

}  // namespace pickfreeze
