#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pickfreeze/distribution.hpp"
#include "pickfreeze/rng.hpp"

namespace pickfreeze {

using ModelFunction = std::function<double(std::span<const double>)>;

/// Additive per-evaluation perturbation delta(x, xi); xi is drawn from `rng`.
using Perturbation = std::function<double(std::span<const double>, Rng&)>;

/// A map f on R^p with independent input laws and a designated frozen block X.
/// Evaluation of `evaluate` must be pure. A model may carry an optional
/// perturbation, in which case observed outputs are evaluate(x) + delta(x, xi).
struct ModelSpec {
  std::size_t dimension = 0;
  std::vector<std::size_t> x_indices;
  std::vector<InputDistribution> input_laws;
  ModelFunction evaluate;
  Perturbation perturbation;

  /// Checks the structural invariants; throws ConfigurationError.
  void validate() const;

  /// Complement of x_indices in {0..p-1}, ascending.
  std::vector<std::size_t> z_indices() const;

  /// Copy of this model with a different frozen block.
  ModelSpec with_block(std::vector<std::size_t> indices) const;

  /// f(x) plus the perturbation when present. Throws EvaluationError when the
  /// result is not finite.
  double observe(std::span<const double> x, Rng& noise) const;

  bool is_stochastic() const noexcept { return static_cast<bool>(perturbation); }
};

/// Named group of input coordinates with an optional analytically known index.
struct InputBlock {
  std::string name;
  std::vector<std::size_t> indices;
  std::optional<double> exact_index;
};

/// A model together with its named blocks. `model.x_indices` is the first block.
struct RegisteredModel {
  std::string name;
  ModelSpec model;
  std::vector<InputBlock> blocks;

  const InputBlock& block(const std::string& block_name) const;
  ModelSpec for_block(const std::string& block_name) const;
};

using ModelParams = std::map<std::string, double>;
using ModelFactory = std::function<RegisteredModel(const ModelParams&)>;

/// Name-addressable collection of model factories. A spec string has the form
/// "name" or "name:key=value,key=value".
class ModelRegistry {
 public:
  void add(const std::string& name, ModelFactory factory);
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Throws ConfigurationError for unknown names or malformed parameters.
  RegisteredModel make(const std::string& spec) const;

  /// Registry preloaded with the shipped benchmarks.
  static const ModelRegistry& builtin();

 private:
  std::map<std::string, ModelFactory> factories_;
};

/// Splits "name:a=1,b=2" into its name and parameters.
std::pair<std::string, ModelParams> parse_model_spec(const std::string& spec);

}  // namespace pickfreeze
