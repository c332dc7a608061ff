#include "pickfreeze/model.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "pickfreeze/benchmarks.hpp"
#include "pickfreeze/errors.hpp"

namespace pickfreeze {

void ModelSpec::validate() const {
  if (dimension == 0) throw ConfigurationError("model dimension must be positive");
  if (input_laws.size() != dimension)
    throw ConfigurationError(
        fmt::format("model has {} input laws for dimension {}", input_laws.size(), dimension));
  if (!evaluate) throw ConfigurationError("model has no evaluation function");
  if (x_indices.empty()) throw ConfigurationError("frozen block X is empty");
  if (x_indices.size() >= dimension)
    throw ConfigurationError("frozen block X must leave a nonempty complement Z");
  for (std::size_t k = 0; k < x_indices.size(); ++k) {
    if (x_indices[k] >= dimension)
      throw ConfigurationError(fmt::format("block index {} out of range", x_indices[k]));
    if (k > 0 && x_indices[k] <= x_indices[k - 1])
      throw ConfigurationError("block indices must be strictly increasing");
  }
}

std::vector<std::size_t> ModelSpec::z_indices() const {
  std::vector<std::size_t> z;
  for (std::size_t j = 0; j < dimension; ++j)
    if (!std::binary_search(x_indices.begin(), x_indices.end(), j)) z.push_back(j);
  return z;
}

ModelSpec ModelSpec::with_block(std::vector<std::size_t> indices) const {
  ModelSpec copy = *this;
  std::sort(indices.begin(), indices.end());
  copy.x_indices = std::move(indices);
  copy.validate();
  return copy;
}

double ModelSpec::observe(std::span<const double> x, Rng& noise) const {
  double value = evaluate(x);
  if (perturbation) value += perturbation(x, noise);
  if (!std::isfinite(value))
    throw EvaluationError(fmt::format("model returned {} at x = [{}]", value, fmt::join(x, ", ")),
                          std::vector<double>(x.begin(), x.end()));
  return value;
}

const InputBlock& RegisteredModel::block(const std::string& block_name) const {
  for (const auto& b : blocks)
    if (b.name == block_name) return b;
  std::vector<std::string> known;
  for (const auto& b : blocks) known.push_back(b.name);
  throw ConfigurationError(fmt::format("model '{}' has no block '{}' (known: {})", name,
                                       block_name, fmt::join(known, ", ")));
}

ModelSpec RegisteredModel::for_block(const std::string& block_name) const {
  return model.with_block(block(block_name).indices);
}

void ModelRegistry::add(const std::string& name, ModelFactory factory) {
  factories_[name] = std::move(factory);
}

bool ModelRegistry::contains(const std::string& name) const { return factories_.count(name) > 0; }

std::vector<std::string> ModelRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : factories_) out.push_back(name);
  return out;
}

RegisteredModel ModelRegistry::make(const std::string& spec) const {
  auto [name, params] = parse_model_spec(spec);
  auto it = factories_.find(name);
  if (it == factories_.end())
    throw ConfigurationError(
        fmt::format("unknown model '{}' (known: {})", name, fmt::join(names(), ", ")));
  RegisteredModel model = it->second(params);
  model.model.validate();
  return model;
}

namespace {

double param_or(const ModelParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const ModelParams& params, std::initializer_list<std::string_view> allowed,
                    std::string_view model) {
  for (const auto& [key, _] : params)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigurationError(fmt::format("model '{}' has no parameter '{}'", model, key));
}

}  // namespace

const ModelRegistry& ModelRegistry::builtin() {
  static const ModelRegistry registry = [] {
    ModelRegistry r;
    r.add("ishigami", [](const ModelParams& p) {
      reject_unknown(p, {}, "ishigami");
      return ishigami_model();
    });
    r.add("linear-gaussian", [](const ModelParams& p) {
      reject_unknown(p, {"a", "b"}, "linear-gaussian");
      return linear_gaussian(param_or(p, "a", 1.0), param_or(p, "b", 1.0));
    });
    r.add("bernoulli-sum", [](const ModelParams& p) {
      reject_unknown(p, {}, "bernoulli-sum");
      return bernoulli_sum();
    });
    return r;
  }();
  return registry;
}

std::pair<std::string, ModelParams> parse_model_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  ModelParams params;
  if (name.empty()) throw ConfigurationError("empty model name");
  if (colon == std::string::npos) return {name, params};
  std::string rest = spec.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigurationError(fmt::format("malformed model parameter '{}' in '{}'", item, spec));
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size())
      throw ConfigurationError(fmt::format("model parameter '{}' is not a number: '{}'", key, text));
    params[key] = value;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {name, params};
}

}  // namespace pickfreeze
