#include "pickfreeze/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/core.h>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

namespace {

constexpr double kMaxJointAtoms = 1e6;
constexpr double kMaxTripleAtoms = 1e8;

/// Product lattice over a subset of coordinates with its atom probabilities.
struct Lattice {
  std::vector<std::size_t> coords;
  std::vector<std::vector<double>> points;  // points[k][c] = value of coords[c]
  std::vector<double> probs;
};

Lattice enumerate(const ModelSpec& model, const std::vector<std::size_t>& coords) {
  Lattice lat;
  lat.coords = coords;
  lat.points.push_back({});
  lat.probs.push_back(1.0);
  for (std::size_t c : coords) {
    const Discrete& law = model.input_laws[c].as_discrete();
    std::vector<std::vector<double>> points;
    std::vector<double> probs;
    for (std::size_t k = 0; k < lat.points.size(); ++k) {
      for (std::size_t a = 0; a < law.values.size(); ++a) {
        if (law.probs[a] == 0.0) continue;
        auto p = lat.points[k];
        p.push_back(law.values[a]);
        points.push_back(std::move(p));
        probs.push_back(lat.probs[k] * law.probs[a]);
      }
    }
    lat.points = std::move(points);
    lat.probs = std::move(probs);
  }
  return lat;
}

/// f tabulated on the X x Z lattice: table[ix * nz + iz].
struct Tabulated {
  Lattice x;
  Lattice z;
  std::vector<double> table;
};

Tabulated tabulate(const ModelSpec& model) {
  model.validate();
  if (model.is_stochastic())
    throw ConfigurationError("exact enumeration requires a model without perturbation");
  double atoms = 1.0;
  for (const auto& law : model.input_laws) {
    if (!law.is_discrete()) throw ConfigurationError("exact enumeration requires all input laws discrete");
    atoms *= static_cast<double>(law.as_discrete().values.size());
  }
  if (atoms > kMaxJointAtoms)
    throw ConfigurationError(fmt::format("joint support has {} atoms, limit is 1e6", atoms));

  Tabulated t{enumerate(model, model.x_indices), enumerate(model, model.z_indices()), {}};
  t.table.resize(t.x.probs.size() * t.z.probs.size());
  std::vector<double> point(model.dimension);
  for (std::size_t ix = 0; ix < t.x.probs.size(); ++ix) {
    for (std::size_t c = 0; c < t.x.coords.size(); ++c) point[t.x.coords[c]] = t.x.points[ix][c];
    for (std::size_t iz = 0; iz < t.z.probs.size(); ++iz) {
      for (std::size_t c = 0; c < t.z.coords.size(); ++c) point[t.z.coords[c]] = t.z.points[iz][c];
      const double v = model.evaluate(point);
      if (!std::isfinite(v))
        throw EvaluationError("model returned a non-finite value during enumeration", point);
      t.table[ix * t.z.probs.size() + iz] = v;
    }
  }
  return t;
}

struct Moments {
  double mean;
  double variance;
  double conditional_variance;  // Var(E(Y|X))
};

Moments moments(const Tabulated& t) {
  const std::size_t nx = t.x.probs.size(), nz = t.z.probs.size();
  KahanSum mean;
  for (std::size_t ix = 0; ix < nx; ++ix)
    for (std::size_t iz = 0; iz < nz; ++iz)
      mean += t.x.probs[ix] * t.z.probs[iz] * t.table[ix * nz + iz];
  const double m = mean.value();
  KahanSum var, cond_var;
  for (std::size_t ix = 0; ix < nx; ++ix) {
    KahanSum cond;
    for (std::size_t iz = 0; iz < nz; ++iz) {
      const double d = t.table[ix * nz + iz] - m;
      cond += t.z.probs[iz] * d;
      var += t.x.probs[ix] * t.z.probs[iz] * d * d;
    }
    cond_var += t.x.probs[ix] * cond.value() * cond.value();
  }
  return {m, var.value(), cond_var.value()};
}

}  // namespace

double brute_force_sobol(const ModelSpec& model) {
  const Moments mom = moments(tabulate(model));
  if (!(mom.variance > 0.0)) throw DegenerateError("Var(Y) = 0: the Sobol index is undefined");
  return mom.conditional_variance / mom.variance;
}

CovIdentity cov_identity_check(const ModelSpec& model) {
  const Tabulated t = tabulate(model);
  const Moments mom = moments(t);
  if (!(mom.variance > 0.0)) throw DegenerateError("Var(Y) = 0: the Sobol index is undefined");
  const std::size_t nx = t.x.probs.size(), nz = t.z.probs.size();
  if (static_cast<double>(nx) * nz * nz > kMaxTripleAtoms)
    throw ConfigurationError("(X, Z, Z') lattice exceeds 1e8 atoms");

  // Means of Y = f(X,Z) and Y^X = f(X,Z') over the triple law, then the
  // centered cross moment; nothing here uses conditional expectations.
  KahanSum mean_y, mean_yx;
  for (std::size_t ix = 0; ix < nx; ++ix)
    for (std::size_t iz = 0; iz < nz; ++iz)
      for (std::size_t iw = 0; iw < nz; ++iw) {
        const double p = t.x.probs[ix] * t.z.probs[iz] * t.z.probs[iw];
        mean_y += p * t.table[ix * nz + iz];
        mean_yx += p * t.table[ix * nz + iw];
      }
  KahanSum cov;
  for (std::size_t ix = 0; ix < nx; ++ix)
    for (std::size_t iz = 0; iz < nz; ++iz)
      for (std::size_t iw = 0; iw < nz; ++iw) {
        const double p = t.x.probs[ix] * t.z.probs[iz] * t.z.probs[iw];
        cov += p * (t.table[ix * nz + iz] - mean_y.value()) * (t.table[ix * nz + iw] - mean_yx.value());
      }
  return {mom.conditional_variance, cov.value()};
}

std::vector<JointAtom> pick_freeze_joint_law(const ModelSpec& model) {
  const Tabulated t = tabulate(model);
  const std::size_t nx = t.x.probs.size(), nz = t.z.probs.size();
  if (static_cast<double>(nx) * nz * nz > kMaxTripleAtoms)
    throw ConfigurationError("(X, Z, Z') lattice exceeds 1e8 atoms");
  std::vector<JointAtom> atoms;
  atoms.reserve(nx * nz * nz);
  for (std::size_t ix = 0; ix < nx; ++ix)
    for (std::size_t iz = 0; iz < nz; ++iz)
      for (std::size_t iw = 0; iw < nz; ++iw)
        atoms.push_back({t.table[ix * nz + iz], t.table[ix * nz + iw],
                         t.x.probs[ix] * t.z.probs[iz] * t.z.probs[iw]});
  std::sort(atoms.begin(), atoms.end(), [](const JointAtom& a, const JointAtom& b) {
    return a.y < b.y || (a.y == b.y && a.y_x < b.y_x);
  });
  std::vector<JointAtom> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && merged.back().y == a.y && merged.back().y_x == a.y_x)
      merged.back().prob += a.prob;
    else
      merged.push_back(a);
  }
  return merged;
}

}  // namespace pickfreeze
