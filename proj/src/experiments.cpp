#include "pickfreeze/experiments.hpp"

#include <cmath>
#include <fmt/core.h>
#include <limits>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/oracle.hpp"
#include "pickfreeze/parallel.hpp"
#include "pickfreeze/sampling.hpp"
#include "pickfreeze/summation.hpp"

namespace pickfreeze {

namespace {

// Substream tags inside a replicate's stream.
constexpr std::uint64_t kBuildTag = 0;
constexpr std::uint64_t kFirstBlockTag = 1;

struct ResolvedBlock {
  std::string name;
  std::size_t model_index;
  std::vector<std::size_t> indices;
  double truth;
};

std::vector<ResolvedBlock> resolve_blocks(const ExperimentPlan& plan, const RegisteredModel& model,
                                          const std::map<std::string, double>& truths) {
  std::vector<std::string> names = plan.blocks;
  if (names.empty())
    for (const auto& b : model.blocks) names.push_back(b.name);
  std::vector<ResolvedBlock> out;
  for (const auto& name : names) {
    const InputBlock& block = model.block(name);
    const auto pos = static_cast<std::size_t>(&block - model.blocks.data());
    double truth = 0.0;
    if (auto it = truths.find(name); it != truths.end()) {
      truth = it->second;
    } else if (block.exact_index) {
      truth = *block.exact_index;
    } else {
      try {
        truth = brute_force_sobol(model.for_block(name));
      } catch (const ConfigurationError&) {
        throw ConfigurationError(fmt::format("no known true index for block '{}' of model '{}'", name,
                                    model.name));
      }
    }
    out.push_back({name, pos, block.indices, truth});
  }
  return out;
}

bool is_surrogate(MetamodelKind k) {
  return k == MetamodelKind::Rkhs || k == MetamodelKind::NadarayaWatson;
}

void check_learning_cap(const ExperimentPlan& plan) {
  const std::size_t n = plan_learning_size(plan);
  if (n > plan.learning_cap)
    throw PlanError(fmt::format("learning sample n = {} (a = {}, N = {}) exceeds the cap of {}", n,
                                plan.metamodel.a, plan.n, plan.learning_cap));
}

CoverageReport run_resolved(const ExperimentPlan& plan, const std::string& model_name,
                            const ModelSpec& base, const std::vector<ResolvedBlock>& blocks) {
  const auto family = make_family(plan, base);
  const std::size_t n_blocks = blocks.size();
  const std::size_t n_est = plan.estimators.size();
  const std::size_t per_replicate = n_blocks * n_est;
  std::vector<ReplicateRecord> records(plan.replicates * per_replicate);

  FirstException failure;
  const auto count = static_cast<std::ptrdiff_t>(plan.replicates);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(plan.workers))
  for (std::ptrdiff_t rr = 0; rr < count; ++rr) {
    const auto r = static_cast<std::size_t>(rr);
    try {
      const RngStream stream(plan.master_seed, r);
      const ModelSpec model = family ? family->build(plan.n, stream.substream(kBuildTag)) : base;
      for (std::size_t b = 0; b < n_blocks; ++b) {
        const ModelSpec spec = model.with_block(blocks[b].indices);
        const PickFreezeSample sample = sample_pick_freeze_serial(
            spec, plan.n, stream.substream(kFirstBlockTag + blocks[b].model_index));
        for (std::size_t e = 0; e < n_est; ++e) {
          ReplicateRecord& rec = records[r * per_replicate + b * n_est + e];
          rec.replicate = r;
          rec.block = blocks[b].name;
          rec.estimator = plan.estimators[e];
          try {
            const SobolEstimate est = estimate(sample, plan.estimators[e]);
            rec.estimate = est.value;
            rec.sigma2 = est.sigma2;
            rec.ci = confidence_interval(est, plan.alpha);
            rec.contains = rec.ci.contains(blocks[b].truth);
          } catch (const DegenerateError&) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            rec.degenerate = true;
            rec.estimate = rec.sigma2 = nan;
            rec.ci = {nan, nan, 1.0 - plan.alpha};
            rec.contains = false;
          }
        }
      }
    } catch (...) {
      failure.capture(r);
    }
  }
  failure.rethrow_if_any();

  CoverageReport report;
  report.plan = plan;
  report.model = model_name;
  report.learning_size = plan_learning_size(plan);
  switch (plan.metamodel.kind) {
    case MetamodelKind::None: report.a_or_beta = std::numeric_limits<double>::quiet_NaN(); break;
    case MetamodelKind::Gaussian:
    case MetamodelKind::Weibull: report.a_or_beta = plan.metamodel.beta; break;
    default: report.a_or_beta = plan.metamodel.a; break;
  }
  for (std::size_t b = 0; b < n_blocks; ++b) {
    for (std::size_t e = 0; e < n_est; ++e) {
      CoverageCell cell;
      cell.block = blocks[b].name;
      cell.estimator = plan.estimators[e];
      cell.truth = blocks[b].truth;
      cell.replicates = plan.replicates;
      KahanSum lengths;
      for (std::size_t r = 0; r < plan.replicates; ++r) {
        const ReplicateRecord& rec = records[r * per_replicate + b * n_est + e];
        if (rec.degenerate) {
          ++cell.degenerate;
          continue;
        }
        if (rec.contains) ++cell.covered;
        lengths += rec.ci.length();
      }
      cell.coverage = static_cast<double>(cell.covered) / static_cast<double>(plan.replicates);
      const std::size_t used = plan.replicates - cell.degenerate;
      cell.mean_ci_length = used > 0 ? lengths.value() / static_cast<double>(used)
                                     : std::numeric_limits<double>::quiet_NaN();
      cell.scaled_length = cell.mean_ci_length * std::sqrt(static_cast<double>(plan.n));
      report.cells.push_back(cell);
    }
  }
  report.records = std::move(records);
  return report;
}

}  // namespace

std::string_view to_string(MetamodelKind kind) noexcept {
  switch (kind) {
    case MetamodelKind::None: return "none";
    case MetamodelKind::Gaussian: return "gaussian";
    case MetamodelKind::Weibull: return "weibull";
    case MetamodelKind::Rkhs: return "rkhs";
    case MetamodelKind::NadarayaWatson: return "nw";
  }
  return "none";
}

MetamodelKind parse_metamodel_kind(std::string_view text) {
  for (auto k : {MetamodelKind::None, MetamodelKind::Gaussian, MetamodelKind::Weibull,
                 MetamodelKind::Rkhs, MetamodelKind::NadarayaWatson})
    if (text == to_string(k)) return k;
  throw ConfigurationError(
      fmt::format("unknown metamodel '{}' (expected none, gaussian, weibull, rkhs, nw)", text));
}

void ExperimentPlan::validate() const {
  if (n < 2) throw ConfigurationError(fmt::format("sample size N must be >= 2, got {}", n));
  if (replicates < 1) throw ConfigurationError("replicate count R must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ConfigurationError(fmt::format("alpha must lie in (0, 1), got {}", alpha));
  if (estimators.empty()) throw ConfigurationError("at least one estimator is required");
  if (experiment_id.empty() || experiment_id.find_first_of(",\n\r\"") != std::string::npos)
    throw ConfigurationError("experiment id must be non-empty and free of commas and quotes");
  switch (metamodel.kind) {
    case MetamodelKind::Gaussian:
    case MetamodelKind::Weibull:
      if (!(metamodel.beta > 0.0)) throw ConfigurationError("beta must be > 0");
      break;
    case MetamodelKind::Rkhs:
    case MetamodelKind::NadarayaWatson:
      if (!(metamodel.a > 0.0)) throw ConfigurationError("growth rate a must be > 0");
      if (!(metamodel.noise_sd >= 0.0)) throw ConfigurationError("noise sd must be >= 0");
      if (!(metamodel.bandwidth_scale > 0.0))
        throw ConfigurationError("bandwidth scale must be > 0");
      break;
    case MetamodelKind::None: break;
  }
}

const CoverageCell& CoverageReport::cell(const std::string& block, EstimatorKind estimator) const {
  for (const auto& c : cells)
    if (c.block == block && c.estimator == estimator) return c;
  throw ConfigurationError(
      fmt::format("report has no cell for block '{}' estimator {}", block, to_string(estimator)));
}

std::size_t plan_learning_size(const ExperimentPlan& plan) {
  switch (plan.metamodel.kind) {
    case MetamodelKind::Rkhs: return learning_size_rkhs(plan.metamodel.a, plan.n);
    case MetamodelKind::NadarayaWatson: return learning_size_nw(plan.metamodel.a, plan.n);
    default: return 0;
  }
}

std::optional<MetamodelFamily> make_family(const ExperimentPlan& plan, const ModelSpec& base) {
  const auto& m = plan.metamodel;
  switch (m.kind) {
    case MetamodelKind::None: return std::nullopt;
    case MetamodelKind::Gaussian: return gaussian_perturbation(base, m.beta);
    case MetamodelKind::Weibull: return weibull_perturbation(base, m.beta, m.weibull_coordinate);
    case MetamodelKind::Rkhs: {
      RkhsOptions o;
      o.bandwidth_scale = m.bandwidth_scale;
      return rkhs_family(base, m.a, o);
    }
    case MetamodelKind::NadarayaWatson: {
      NwOptions o;
      o.noise_sd = m.noise_sd;
      return nw_family(base, m.a, o);
    }
  }
  return std::nullopt;
}

CoverageReport run_coverage(const ExperimentPlan& plan, const RegisteredModel& model,
                            const std::map<std::string, double>& truths) {
  plan.validate();
  check_learning_cap(plan);
  const auto blocks = resolve_blocks(plan, model, truths);
  return run_resolved(plan, model.name, model.model, blocks);
}

CoverageReport run_coverage(const ExperimentPlan& plan, const ModelSpec& model, double truth) {
  plan.validate();
  check_learning_cap(plan);
  model.validate();
  const std::string name = plan.blocks.empty() ? "x" : plan.blocks.front();
  return run_resolved(plan, "custom", model, {{name, 0, model.x_indices, truth}});
}

std::vector<LengthComparison> ci_length_comparison(const CoverageReport& report) {
  std::vector<LengthComparison> out;
  for (const auto& c : report.cells) {
    if (c.estimator != EstimatorKind::S) continue;
    const CoverageCell& t = report.cell(c.block, EstimatorKind::T);
    LengthComparison cmp{c.block, c.scaled_length, t.scaled_length, 0.0};
    cmp.relative_difference = c.scaled_length > 0.0
                                  ? (t.scaled_length - c.scaled_length) / c.scaled_length
                                  : 0.0;
    out.push_back(cmp);
  }
  return out;
}

std::vector<LengthComparison> ci_length_comparison(ExperimentPlan plan,
                                                   const RegisteredModel& model) {
  plan.estimators = {EstimatorKind::S, EstimatorKind::T};
  return ci_length_comparison(run_coverage(plan, model));
}

std::vector<CoverageReport> beta_sweep(const ExperimentPlan& plan, const RegisteredModel& model,
                                       const std::vector<double>& betas) {
  if (plan.metamodel.kind != MetamodelKind::Gaussian &&
      plan.metamodel.kind != MetamodelKind::Weibull)
    throw ConfigurationError("beta sweep needs a gaussian or weibull metamodel");
  if (betas.empty()) throw ConfigurationError("beta grid is empty");
  std::vector<ExperimentPlan> plans;
  for (double beta : betas) {
    ExperimentPlan p = plan;
    p.metamodel.beta = beta;
    p.validate();
    plans.push_back(p);
  }
  const auto blocks = resolve_blocks(plan, model, {});
  std::vector<CoverageReport> out;
  for (const auto& p : plans) out.push_back(run_resolved(p, model.name, model.model, blocks));
  return out;
}

std::vector<CoverageReport> surrogate_sweep(const ExperimentPlan& plan,
                                            const RegisteredModel& model,
                                            const std::vector<SweepCell>& cells) {
  if (!is_surrogate(plan.metamodel.kind))
    throw ConfigurationError("surrogate sweep needs an rkhs or nw metamodel");
  if (cells.empty()) throw ConfigurationError("sweep grid is empty");
  std::vector<ExperimentPlan> plans;
  for (const auto& cell : cells) {
    ExperimentPlan p = plan;
    p.metamodel.a = cell.a;
    p.n = cell.n;
    p.validate();
    plans.push_back(p);
  }
  for (const auto& p : plans) check_learning_cap(p);
  const auto blocks = resolve_blocks(plan, model, {});
  std::vector<CoverageReport> out;
  for (const auto& p : plans) out.push_back(run_resolved(p, model.name, model.model, blocks));
  return out;
}

std::vector<CoverageReport> surrogate_sweep(const ExperimentPlan& plan,
                                            const RegisteredModel& model,
                                            const std::vector<double>& a_grid,
                                            const std::vector<std::size_t>& n_list) {
  std::vector<SweepCell> cells;
  for (double a : a_grid)
    for (std::size_t n : n_list) cells.push_back({a, n});
  return surrogate_sweep(plan, model, cells);
}

}  // namespace pickfreeze
