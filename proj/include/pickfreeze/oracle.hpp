#pragma once

#include <vector>

#include "pickfreeze/model.hpp"

namespace pickfreeze {

/// Exact Var(E(Y|X)) / Var(Y) by enumeration of the (X, Z) lattice.
/// Requires all laws discrete and at most 1e6 joint atoms; throws
/// ConfigurationError otherwise and DegenerateError when Var(Y) = 0.
double brute_force_sobol(const ModelSpec& model);

struct CovIdentity {
  double lhs;  // Var(E(Y|X))
  double rhs;  // Cov(Y, Y^X) over the joint law of (X, Z, Z')
};

/// Both sides of Var(E(Y|X)) = Cov(Y, Y^X), each by its own enumeration.
/// The triple lattice (X, Z, Z') is limited to 1e8 atoms.
CovIdentity cov_identity_check(const ModelSpec& model);

struct JointAtom {
  double y;
  double y_x;
  double prob;
};

/// Exact joint law of (Y, Y^X), atoms merged on identical output pairs and
/// sorted lexicographically.
std::vector<JointAtom> pick_freeze_joint_law(const ModelSpec& model);

}  // namespace pickfreeze
