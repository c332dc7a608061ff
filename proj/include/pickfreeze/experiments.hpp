#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pickfreeze/estimators.hpp"
#include "pickfreeze/metamodel/families.hpp"
#include "pickfreeze/model.hpp"

namespace pickfreeze {

enum class MetamodelKind { None, Gaussian, Weibull, Rkhs, NadarayaWatson };

std::string_view to_string(MetamodelKind kind) noexcept;
/// Accepts none, gaussian, weibull, rkhs, nw.
MetamodelKind parse_metamodel_kind(std::string_view text);

struct MetamodelConfig {
  MetamodelKind kind = MetamodelKind::None;
  double beta = 1.0;               // gaussian, weibull
  std::size_t weibull_coordinate = 2;
  double a = 0.8;                  // rkhs, nw
  double noise_sd = 0.3;           // nw
  double bandwidth_scale = 1.7;    // rkhs
};

struct ExperimentPlan {
  std::string experiment_id = "run";
  std::vector<std::string> blocks;  // empty: every block of the model
  std::vector<EstimatorKind> estimators = {EstimatorKind::S, EstimatorKind::T};
  std::size_t n = 10000;
  std::size_t replicates = 300;
  double alpha = 0.05;
  std::uint64_t master_seed = 1;
  MetamodelConfig metamodel;
  std::size_t learning_cap = 20000;  // largest surrogate learning sample allowed
  int workers = 0;                   // 0: process default

  /// Throws ConfigurationError for N < 2, R < 1 or alpha outside (0, 1).
  void validate() const;
};

struct ReplicateRecord {
  std::size_t replicate = 0;
  std::string block;
  EstimatorKind estimator = EstimatorKind::S;
  double estimate = 0.0;
  double sigma2 = 0.0;
  ConfidenceInterval ci;
  bool contains = false;
  bool degenerate = false;  // zero-variance sample: no interval, counted as not covering
};

struct CoverageCell {
  std::string block;
  EstimatorKind estimator = EstimatorKind::S;
  double truth = 0.0;
  std::size_t replicates = 0;
  std::size_t covered = 0;
  std::size_t degenerate = 0;
  double coverage = 0.0;        // covered / replicates
  double mean_ci_length = 0.0;  // over non-degenerate replicates
  double scaled_length = 0.0;   // mean_ci_length * sqrt(N)
};

struct CoverageReport {
  ExperimentPlan plan;
  std::string model;
  std::size_t learning_size = 0;  // 0 when no surrogate is trained
  double a_or_beta = 0.0;         // NaN when no metamodel
  std::vector<CoverageCell> cells;
  std::vector<ReplicateRecord> records;  // ordered by (replicate, block, estimator)

  /// Throws ConfigurationError when the cell is absent.
  const CoverageCell& cell(const std::string& block, EstimatorKind estimator) const;
};

/// Surrogate learning size for the plan at its N (0 for non-surrogate plans).
std::size_t plan_learning_size(const ExperimentPlan& plan);

/// Family selected by plan.metamodel, or nullopt for the exact model.
std::optional<MetamodelFamily> make_family(const ExperimentPlan& plan, const ModelSpec& base);

/// Replicated pick-freeze coverage. Replicate r draws everything from
/// RngStream(master_seed, r): metamodels are rebuilt per replicate and every
/// block gets its own sample, shared by all estimators. Truths come from
/// `truths`, then from the blocks' exact indices, then from the discrete
/// oracle; otherwise ConfigurationError. The learning cap is checked before
/// any work and violations raise PlanError.
CoverageReport run_coverage(const ExperimentPlan& plan, const RegisteredModel& model,
                            const std::map<std::string, double>& truths = {});

/// Single-block form against a known truth.
CoverageReport run_coverage(const ExperimentPlan& plan, const ModelSpec& model, double truth);

struct LengthComparison {
  std::string block;
  double scaled_length_s = 0.0;
  double scaled_length_t = 0.0;
  double relative_difference = 0.0;  // (T - S) / S
};

/// Paired S vs T interval lengths on identical samples.
std::vector<LengthComparison> ci_length_comparison(const CoverageReport& report);
std::vector<LengthComparison> ci_length_comparison(ExperimentPlan plan, const RegisteredModel& model);

/// One coverage run per beta for a gaussian or weibull plan.
std::vector<CoverageReport> beta_sweep(const ExperimentPlan& plan, const RegisteredModel& model,
                                       const std::vector<double>& betas);

/// One coverage run per (a, N) cell for an rkhs or nw plan. Every cell's
/// learning size is checked against the cap before any run starts.
std::vector<CoverageReport> surrogate_sweep(const ExperimentPlan& plan,
                                            const RegisteredModel& model,
                                            const std::vector<double>& a_grid,
                                            const std::vector<std::size_t>& n_list);

struct SweepCell {
  double a;
  std::size_t n;
};

/// Same, over an explicit list of cells.
std::vector<CoverageReport> surrogate_sweep(const ExperimentPlan& plan,
                                            const RegisteredModel& model,
                                            const std::vector<SweepCell>& cells);

}  // namespace pickfreeze
