#include "pickfreeze/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/core.h>

#include "pickfreeze/errors.hpp"

namespace pickfreeze {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

InputDistribution::InputDistribution(Kind kind) : kind_(std::move(kind)) {
  std::visit(
      Overloaded{
          [](const Uniform& u) {
            if (!(std::isfinite(u.lo) && std::isfinite(u.hi) && u.lo < u.hi))
              throw ConfigurationError(fmt::format("uniform law needs lo < hi, got [{}, {}]", u.lo, u.hi));
          },
          [](const StandardNormal&) {},
          [](const Weibull& w) {
            if (!(w.scale > 0.0 && w.shape > 0.0 && std::isfinite(w.scale) && std::isfinite(w.shape)))
              throw ConfigurationError(
                  fmt::format("weibull law needs scale, shape > 0, got ({}, {})", w.scale, w.shape));
          },
          [this](const Discrete& d) {
            if (d.values.empty() || d.values.size() != d.probs.size())
              throw ConfigurationError("discrete law needs equally many (>0) values and probs");
            double total = 0.0;
            cdf_.reserve(d.probs.size());
            for (std::size_t i = 0; i < d.probs.size(); ++i) {
              if (!(d.probs[i] >= 0.0) || !std::isfinite(d.values[i]))
                throw ConfigurationError("discrete law has a negative probability or non-finite atom");
              total += d.probs[i];
              cdf_.push_back(total);
            }
            if (std::abs(total - 1.0) > 1e-12)
              throw ConfigurationError(fmt::format("discrete probabilities sum to {}, not 1", total));
          },
      },
      kind_);
}

double sample_weibull(Rng& rng, double scale, double shape) {
  // 1 - U with U in [0,1) lies in (0,1]; log1p keeps precision for small U.
  const double u = rng.uniform();
  return scale * std::pow(-std::log1p(-u), 1.0 / shape);
}

double InputDistribution::sample(Rng& rng) const {
  return std::visit(
      Overloaded{
          [&](const Uniform& u) { return u.lo + (u.hi - u.lo) * rng.uniform(); },
          [&](const StandardNormal&) { return rng.normal(); },
          [&](const Weibull& w) { return sample_weibull(rng, w.scale, w.shape); },
          [&](const Discrete& d) {
            const double u = rng.uniform() * cdf_.back();
            auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
            auto idx = static_cast<std::size_t>(it - cdf_.begin());
            if (idx >= d.values.size()) idx = d.values.size() - 1;
            return d.values[idx];
          },
      },
      kind_);
}

}  // namespace pickfreeze
