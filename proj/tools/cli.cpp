#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fmt/core.h>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pickfreeze/csv.hpp"
#include "pickfreeze/errors.hpp"
#include "pickfreeze/estimators.hpp"
#include "pickfreeze/experiments.hpp"
#include "pickfreeze/metamodel/decay.hpp"
#include "pickfreeze/metamodel/diagnostics.hpp"
#include "pickfreeze/metamodel/families.hpp"
#include "pickfreeze/model.hpp"
#include "pickfreeze/parallel.hpp"
#include "pickfreeze/sampling.hpp"

namespace pickfreeze::cli {

namespace {

struct PlanOptions {
  std::string model;
  std::vector<std::string> blocks;
  std::vector<std::string> estimators = {"s", "t"};
  std::vector<std::size_t> n = {10000};
  std::size_t replicates = 300;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  std::string id = "run";
  std::string metamodel = "none";
  double beta = 1.0;
  double a = 0.8;
  double noise_sd = 0.3;
  double bandwidth_scale = 1.7;
  std::size_t weibull_coordinate = 2;
  std::size_t learning_cap = 20000;
  std::string records;
  std::string summary;
  bool full = false;
};

struct EstimateOptions {
  std::string model;
  std::string block;
  std::string estimator = "t";
  std::size_t n = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  bool clip_display = false;
};

struct BenchOptions {
  std::string kind = "rkhs";
  std::string model = "ishigami";
  std::vector<std::size_t> n_grid;
  std::size_t seeds = 5;
  std::size_t n_test = 1000;
  std::uint64_t seed = 1;
  std::string table;
  std::string law = "exponential";
  double dimension = 3.0;
  double noise_sd = 0.3;
  double bandwidth_scale = 1.7;
  std::string output;
};

void add_plan_options(CLI::App* cmd, PlanOptions& o, bool with_metamodel) {
  cmd->add_option("--model", o.model, "Registered model, e.g. ishigami or linear-gaussian:a=1,b=2")
      ->required();
  cmd->add_option("--blocks", o.blocks, "Input blocks (default: all)")->delimiter(',');
  cmd->add_option("--estimators", o.estimators, "Estimators, s and/or t")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--replicates,-R", o.replicates, "Replicates per cell")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "Risk level")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd->add_option("--id", o.id, "Experiment id written to the CSV")->capture_default_str();
  cmd->add_option("--records", o.records, "Append per-replicate rows to this CSV");
  cmd->add_option("--summary", o.summary, "Append per-cell rows to this CSV");
  cmd->add_flag("--full", o.full, "Large-scale defaults (R = 1000, N up to 50000)");
  if (with_metamodel) {
    cmd->add_option("--beta", o.beta, "Perturbation decay exponent")->capture_default_str();
    cmd->add_option("--a", o.a, "Learning-size growth rate")->capture_default_str();
    cmd->add_option("--noise-sd", o.noise_sd, "Learning noise sd (nw)")->capture_default_str();
    cmd->add_option("--bandwidth-scale", o.bandwidth_scale, "Multiplier on median-distance bandwidths (rkhs)")
        ->capture_default_str();
    cmd->add_option("--weibull-coordinate", o.weibull_coordinate, "Input index of x3 (weibull)")
        ->capture_default_str();
    cmd->add_option("--learning-cap", o.learning_cap, "Largest learning sample allowed")
        ->capture_default_str();
  }
}

ExperimentPlan make_plan(const PlanOptions& o, const RegisteredModel& model, int workers) {
  ExperimentPlan plan;
  plan.experiment_id = o.id;
  plan.blocks = o.blocks;
  for (const auto& name : plan.blocks) model.block(name);
  plan.estimators.clear();
  for (const auto& e : o.estimators) plan.estimators.push_back(parse_estimator_kind(e));
  plan.n = o.n.empty() ? 0 : o.n.front();
  plan.replicates = o.replicates;
  plan.alpha = o.alpha;
  plan.master_seed = o.seed;
  plan.metamodel.kind = parse_metamodel_kind(o.metamodel);
  plan.metamodel.beta = o.beta;
  plan.metamodel.a = o.a;
  plan.metamodel.noise_sd = o.noise_sd;
  plan.metamodel.bandwidth_scale = o.bandwidth_scale;
  plan.metamodel.weibull_coordinate = o.weibull_coordinate;
  plan.learning_cap = o.learning_cap;
  plan.workers = workers;
  if (plan.metamodel.kind == MetamodelKind::Weibull &&
      plan.metamodel.weibull_coordinate >= model.model.dimension)
    throw ConfigurationError("--weibull-coordinate is out of range for the model");
  plan.validate();
  return plan;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i];
  return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += fmt::format("{}{}", i ? ";" : "", v[i]);
  return s;
}

// Everything that determines the numbers, and nothing that does not
// (worker count and output paths are left out so reruns compare equal).
CsvMetadata metadata(const std::string& command, const PlanOptions& o, const ExperimentPlan& plan,
                     const std::vector<std::pair<std::string, std::string>>& extra) {
  std::vector<std::string> est;
  for (auto e : plan.estimators) est.emplace_back(to_string(e));
  CsvMetadata meta = {
      {"command", command},
      {"model", o.model},
      {"blocks", o.blocks.empty() ? "all" : join(o.blocks)},
      {"estimators", join(est)},
      {"N", join_numbers(o.n)},
      {"replicates", std::to_string(plan.replicates)},
      {"alpha", fmt::format("{}", plan.alpha)},
      {"master_seed", std::to_string(plan.master_seed)},
      {"experiment_id", plan.experiment_id},
      {"metamodel", std::string(to_string(plan.metamodel.kind))},
  };
  switch (plan.metamodel.kind) {
    case MetamodelKind::Gaussian:
      meta.emplace_back("beta", fmt::format("{}", plan.metamodel.beta));
      break;
    case MetamodelKind::Weibull:
      meta.emplace_back("beta", fmt::format("{}", plan.metamodel.beta));
      meta.emplace_back("weibull_coordinate", std::to_string(plan.metamodel.weibull_coordinate));
      break;
    case MetamodelKind::Rkhs:
      meta.emplace_back("a", fmt::format("{}", plan.metamodel.a));
      meta.emplace_back("bandwidth_scale", fmt::format("{}", plan.metamodel.bandwidth_scale));
      meta.emplace_back("learning_cap", std::to_string(plan.learning_cap));
      break;
    case MetamodelKind::NadarayaWatson:
      meta.emplace_back("a", fmt::format("{}", plan.metamodel.a));
      meta.emplace_back("noise_sd", fmt::format("{}", plan.metamodel.noise_sd));
      meta.emplace_back("learning_cap", std::to_string(plan.learning_cap));
      break;
    case MetamodelKind::None: break;
  }
  meta.insert(meta.end(), extra.begin(), extra.end());
  return meta;
}

void write_outputs(const PlanOptions& o, const CsvMetadata& meta,
                   const std::vector<CoverageReport>& reports) {
  if (!o.records.empty()) append_records_csv(o.records, meta, reports);
  if (!o.summary.empty()) append_summary_csv(o.summary, meta, reports);
}

void print_summary(std::ostream& out, const std::vector<CoverageReport>& reports,
                   const char* sweep_label) {
  if (reports.empty()) return;
  const auto& first = reports.front();
  std::vector<std::string> blocks;
  for (const auto& c : first.cells)
    if (std::find(blocks.begin(), blocks.end(), c.block) == blocks.end()) blocks.push_back(c.block);
  for (auto kind : first.plan.estimators) {
    out << fmt::format("estimator {}  (R = {}, alpha = {})\n", to_string(kind),
                       first.plan.replicates, first.plan.alpha);
    out << fmt::format("{:>9} {:>8} {:>7}", sweep_label, "N", "n");
    for (const auto& b : blocks) out << fmt::format(" {:>10}", "cov " + b);
    for (const auto& b : blocks) out << fmt::format(" {:>12}", "len*sqrtN " + b);
    out << '\n';
    for (const auto& r : reports) {
      const std::string label = std::isnan(r.a_or_beta) ? "-" : fmt::format("{:g}", r.a_or_beta);
      out << fmt::format("{:>9} {:>8} {:>7}", label, r.plan.n,
                         r.learning_size ? std::to_string(r.learning_size) : "-");
      for (const auto& b : blocks) out << fmt::format(" {:>10.3f}", r.cell(b, kind).coverage);
      for (const auto& b : blocks) out << fmt::format(" {:>12.4f}", r.cell(b, kind).scaled_length);
      out << '\n';
    }
  }
  std::size_t degenerate = 0;
  for (const auto& r : reports)
    for (const auto& c : r.cells) degenerate += c.degenerate;
  if (degenerate > 0)
    out << fmt::format("note: {} degenerate replicate intervals counted as not covering\n",
                       degenerate);
}

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
  const RegisteredModel model = ModelRegistry::builtin().make(o.model);
  const std::string block_name = o.block.empty() ? model.blocks.front().name : o.block;
  const InputBlock& block = model.block(block_name);
  const EstimatorKind kind = parse_estimator_kind(o.estimator);
  if (o.n < 2) throw ConfigurationError("--n must be >= 2");
  if (!(o.alpha > 0.0 && o.alpha < 1.0)) throw ConfigurationError("--alpha must lie in (0, 1)");

  const ModelSpec spec = model.for_block(block_name);
  const PickFreezeSample sample = sample_pick_freeze(spec, o.n, RngStream(o.seed, 0));
  const SobolEstimate est = estimate(sample, kind);
  ConfidenceInterval ci = confidence_interval(est, o.alpha);
  if (o.clip_display) ci = clip_unit(ci);

  out << fmt::format("model      {}\n", model.name);
  out << fmt::format("block      {}\n", block_name);
  out << fmt::format("estimator  {}\n", to_string(kind));
  out << fmt::format("N          {}\n", o.n);
  out << fmt::format("estimate   {:.10g}\n", est.value);
  out << fmt::format("sigma      {:.10g}\n", std::sqrt(est.sigma2));
  out << fmt::format("{:<11}[{:.10g}, {:.10g}]{}\n", fmt::format("ci_{:g}", 100.0 * (1.0 - o.alpha)), ci.lower,
                     ci.upper, o.clip_display ? " (clipped to [0, 1])" : "");
  if (block.exact_index) {
    out << fmt::format("exact      {:.10g}\n", *block.exact_index);
    out << fmt::format("abs_error  {:.3g}\n", std::abs(est.value - *block.exact_index));
  }
  return kOk;
}

std::vector<std::pair<double, double>> read_decay_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError(fmt::format("cannot read table '{}'", path));
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double n = 0.0, v = 0.0;
    if (!(fields >> n >> v)) {
      if (rows.empty() && line.find_first_of("0123456789") == std::string::npos) continue;
      throw ConfigurationError(fmt::format("malformed table row '{}'", line));
    }
    rows.emplace_back(n, v);
  }
  return rows;
}

int cmd_metamodel_bench(BenchOptions o, std::ostream& out, std::ostream& err) {
  std::vector<double> ns, vars;
  DecayLaw law = DecayLaw::Exponential;
  double p = o.dimension;
  if (o.kind == "table") {
    if (o.table.empty()) throw ConfigurationError("--table is required for kind table");
    if (o.law == "power") law = DecayLaw::Power;
    else if (o.law != "exponential") throw ConfigurationError("--law must be exponential or power");
    for (const auto& [n, v] : read_decay_table(o.table)) {
      ns.push_back(n);
      vars.push_back(v);
    }
  } else if (o.kind == "rkhs" || o.kind == "nw") {
    const RegisteredModel model = ModelRegistry::builtin().make(o.model);
    const bool rkhs = o.kind == "rkhs";
    law = rkhs ? DecayLaw::Exponential : DecayLaw::Power;
    p = static_cast<double>(model.model.dimension);
    if (o.n_grid.empty())
      o.n_grid = rkhs ? std::vector<std::size_t>{40, 80, 160, 320}
                      : std::vector<std::size_t>{250, 500, 1000, 2000, 4000};
    if (!std::is_sorted(o.n_grid.begin(), o.n_grid.end()) ||
        std::adjacent_find(o.n_grid.begin(), o.n_grid.end()) != o.n_grid.end())
      throw ConfigurationError("--n-grid must be strictly increasing");
    if (o.seeds < 1) throw ConfigurationError("--seeds must be >= 1");
    if (o.n_test < 2) throw ConfigurationError("--n-test must be >= 2");
    RkhsOptions ro;
    ro.bandwidth_scale = o.bandwidth_scale;
    NwOptions no;
    no.noise_sd = o.noise_sd;
    for (std::size_t n : o.n_grid) {
      double sum = 0.0;
      for (std::size_t s = 0; s < o.seeds; ++s) {
        const RngStream stream(o.seed, s);
        const Surrogate sur = rkhs ? train_rkhs(model.model, n, stream.substream(0), ro)
                                   : train_nw(model.model, n, stream.substream(0), no);
        sum += estimate_error_variance(model.model, sur, o.n_test, stream.substream(1));
      }
      ns.push_back(static_cast<double>(n));
      vars.push_back(sum / static_cast<double>(o.seeds));
    }
  } else {
    throw ConfigurationError("--kind must be rkhs, nw or table");
  }

  out << fmt::format("{:>8} {:>22}\n", "n", "error_variance");
  for (std::size_t i = 0; i < ns.size(); ++i) out << fmt::format("{:>8g} {:>22.12g}\n", ns[i], vars[i]);
  bool decreasing = true;
  for (std::size_t i = 1; i < vars.size(); ++i) decreasing = decreasing && vars[i] < vars[i - 1];
  out << fmt::format("strictly_decreasing {}\n", decreasing ? "yes" : "no");

  const DecayFit fit =
      law == DecayLaw::Exponential ? fit_exponential_decay(ns, vars, p) : fit_power_decay(ns, vars);
  out << fmt::format("law        {}\n", to_string(fit.law));
  out << fmt::format("C          {:.12g}\n", fit.c);
  out << fmt::format("rate       {:.12g}\n", fit.rate);
  if (law == DecayLaw::Exponential) out << fmt::format("p          {:g}\n", fit.p);
  out << fmt::format("r2         {:.6f}\n", fit.r2);
  if (fit.rate > 0.0) {
    out << fmt::format("critical_a {:.2f}\n", critical_growth_rate(fit));
  } else {
    err << fmt::format("warning: fitted rate {:.6g} is not positive; no critical growth rate\n",
                       fit.rate);
  }

  if (!o.output.empty()) {
    std::ofstream csv(o.output, std::ios::binary);
    if (!csv) throw ConfigurationError(fmt::format("cannot open '{}' for writing", o.output));
    write_csv_preamble(csv, "pickfreeze-decay/1",
                       {{"kind", o.kind}, {"model", o.model}, {"seeds", std::to_string(o.seeds)},
                        {"n_test", std::to_string(o.n_test)}, {"master_seed", std::to_string(o.seed)},
                        {"law", std::string(to_string(fit.law))},
                        {"C", fmt::format("{:.17g}", fit.c)},
                        {"rate", fmt::format("{:.17g}", fit.rate)}},
                       {"n", "error_variance"});
    for (std::size_t i = 0; i < ns.size(); ++i) csv << fmt::format("{:.17g},{:.17g}\n", ns[i], vars[i]);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pick-freeze Sobol index estimation and coverage experiments", "pickfreeze"};
  app.require_subcommand(1);
  app.allow_config_extras(false);
  app.set_config("--config", "", "INI file; [command] sections hold that command's options");

  int workers = 0;
  app.add_option("--workers", workers, "Worker threads (0: OpenMP default)")
      ->envname("PICKFREEZE_WORKERS")
      ->check(CLI::NonNegativeNumber);

  EstimateOptions est;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate one index with its CI");
  estimate_cmd->add_option("--model", est.model, "Registered model")->required();
  estimate_cmd->add_option("--block", est.block, "Input block (default: first)");
  estimate_cmd->add_option("--estimator", est.estimator, "s or t")->capture_default_str();
  estimate_cmd->add_option("--n", est.n, "Monte Carlo sample size")->capture_default_str();
  estimate_cmd->add_option("--alpha", est.alpha, "Risk level")->capture_default_str();
  estimate_cmd->add_option("--seed", est.seed, "Master seed")->capture_default_str();
  estimate_cmd->add_flag("--clip-display", est.clip_display, "Print the CI intersected with [0, 1]");

  PlanOptions cov;
  auto* coverage_cmd = app.add_subcommand("coverage", "Replicated coverage at one or more N");
  add_plan_options(coverage_cmd, cov, true);
  coverage_cmd->add_option("--n", cov.n, "Sample sizes")->delimiter(',')->capture_default_str();
  coverage_cmd->add_option("--metamodel", cov.metamodel, "none, gaussian, weibull, rkhs or nw")
      ->capture_default_str();

  PlanOptions sb;
  sb.metamodel = "gaussian";
  sb.n = {20000};
  sb.replicates = 200;
  std::vector<double> betas = {0.2, 0.4, 0.6, 0.8, 1.0};
  auto* beta_cmd = app.add_subcommand("sweep-beta", "Coverage against the perturbation exponent");
  add_plan_options(beta_cmd, sb, true);
  beta_cmd->add_option("--n", sb.n, "Sample size")->expected(1)->capture_default_str();
  beta_cmd->add_option("--metamodel", sb.metamodel, "gaussian or weibull")->capture_default_str();
  beta_cmd->add_option("--betas", betas, "Beta grid")->delimiter(',')->capture_default_str();

  PlanOptions ss;
  ss.metamodel = "rkhs";
  ss.replicates = 100;
  std::vector<double> a_grid;
  std::vector<std::size_t> n_list;
  std::vector<std::string> cells;
  auto* surrogate_cmd =
      app.add_subcommand("sweep-surrogate", "Coverage of surrogate-based estimates over (a, N)");
  add_plan_options(surrogate_cmd, ss, true);
  surrogate_cmd->add_option("--metamodel", ss.metamodel, "rkhs or nw")->capture_default_str();
  surrogate_cmd->add_option("--a-grid", a_grid, "Growth rates (crossed with --n-list)")->delimiter(',');
  surrogate_cmd->add_option("--n-list", n_list, "Sample sizes (crossed with --a-grid)")->delimiter(',');
  surrogate_cmd->add_option("--cells", cells, "Explicit a:N cells; default: the reference table for the metamodel")
      ->delimiter(',');

  BenchOptions bench;
  auto* bench_cmd =
      app.add_subcommand("metamodel-bench", "Error-variance decay and critical growth rate");
  bench_cmd->add_option("--kind", bench.kind, "rkhs, nw or table")->capture_default_str();
  bench_cmd->add_option("--model", bench.model, "Registered model")->capture_default_str();
  bench_cmd->add_option("--n-grid", bench.n_grid, "Learning sizes")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds averaged per n")->capture_default_str();
  bench_cmd->add_option("--n-test", bench.n_test, "Test draws per error variance")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Master seed")->capture_default_str();
  bench_cmd->add_option("--table", bench.table, "CSV of n,variance rows (kind table)");
  bench_cmd->add_option("--law", bench.law, "exponential or power (kind table)")
      ->capture_default_str();
  bench_cmd->add_option("--dimension", bench.dimension, "p in exp(-k n^(1/p)) (kind table)")
      ->capture_default_str();
  bench_cmd->add_option("--noise-sd", bench.noise_sd, "Learning noise sd (nw)")->capture_default_str();
  bench_cmd->add_option("--bandwidth-scale", bench.bandwidth_scale, "Bandwidth multiplier (rkhs)")
      ->capture_default_str();
  bench_cmd->add_option("--output", bench.output, "Write the decay table as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    set_default_workers(workers);
    if (*estimate_cmd) return cmd_estimate(est, out);
    if (*bench_cmd) return cmd_metamodel_bench(bench, out, err);

    if (*coverage_cmd) {
      const RegisteredModel model = ModelRegistry::builtin().make(cov.model);
      if (cov.full) {
        if (coverage_cmd->count("--replicates") == 0) cov.replicates = 1000;
        if (coverage_cmd->count("--n") == 0) cov.n = {100, 500, 1000, 5000, 10000, 50000};
      }
      std::vector<ExperimentPlan> plans;
      for (std::size_t n : cov.n) {
        PlanOptions one = cov;
        one.n = {n};
        plans.push_back(make_plan(one, model, workers));
      }
      if (plans.empty()) throw ConfigurationError("--n needs at least one value");
      for (const auto& p : plans) {
        if (plan_learning_size(p) > p.learning_cap)
          throw PlanError(fmt::format("learning sample n = {} exceeds the cap of {}",
                                      plan_learning_size(p), p.learning_cap));
      }
      std::vector<CoverageReport> reports;
      for (const auto& p : plans) reports.push_back(run_coverage(p, model));
      write_outputs(cov, metadata("coverage", cov, plans.front(), {}), reports);
      print_summary(out, reports, plans.front().metamodel.kind == MetamodelKind::None
                                      ? "-"
                                      : (plans.front().metamodel.kind == MetamodelKind::Gaussian ||
                                         plans.front().metamodel.kind == MetamodelKind::Weibull)
                                            ? "beta"
                                            : "a");
      return kOk;
    }

    if (*beta_cmd) {
      const RegisteredModel model = ModelRegistry::builtin().make(sb.model);
      if (sb.full) {
        if (beta_cmd->count("--replicates") == 0) sb.replicates = 1000;
        if (beta_cmd->count("--n") == 0) sb.n = {50000};
        if (beta_cmd->count("--betas") == 0)
          betas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.25, 1.5, 1.75, 2.0};
      }
      const ExperimentPlan plan = make_plan(sb, model, workers);
      const auto reports = beta_sweep(plan, model, betas);
      write_outputs(sb, metadata("sweep-beta", sb, plan, {{"betas", join_numbers(betas)}}),
                    reports);
      print_summary(out, reports, "beta");
      return kOk;
    }

    if (*surrogate_cmd) {
      const RegisteredModel model = ModelRegistry::builtin().make(ss.model);
      if (ss.full && surrogate_cmd->count("--replicates") == 0) ss.replicates = 1000;
      ExperimentPlan plan = make_plan(ss, model, workers);
      std::vector<SweepCell> sweep;
      if (!cells.empty()) {
        if (!a_grid.empty() || !n_list.empty())
          throw ConfigurationError("--cells cannot be combined with --a-grid/--n-list");
        for (const auto& c : cells) {
          const auto colon = c.find(':');
          if (colon == std::string::npos) throw ConfigurationError(fmt::format("cell '{}' is not a:N", c));
          std::size_t used_a = 0, used_n = 0;
          double a = 0.0;
          unsigned long long n = 0;
          try {
            a = std::stod(c.substr(0, colon), &used_a);
            n = std::stoull(c.substr(colon + 1), &used_n);
          } catch (const std::exception&) {
            throw ConfigurationError(fmt::format("cell '{}' is not a:N", c));
          }
          if (used_a != colon || used_n != c.size() - colon - 1)
            throw ConfigurationError(fmt::format("cell '{}' is not a:N", c));
          sweep.push_back({a, static_cast<std::size_t>(n)});
        }
      } else if (!a_grid.empty() || !n_list.empty()) {
        if (a_grid.empty() || n_list.empty())
          throw ConfigurationError("--a-grid and --n-list must be given together");
        for (double a : a_grid)
          for (std::size_t n : n_list) sweep.push_back({a, n});
      } else if (plan.metamodel.kind == MetamodelKind::Rkhs) {
        sweep = {{.4, 3000}, {.4, 4000}, {.4, 6000},  {.4, 10000}, {.4, 20000},
                 {.6, 3000}, {.6, 4000}, {.6, 10000}, {.6, 20000}, {.7, 3000},
                 {.7, 4000}, {.7, 6000}, {.8, 4000}};
      } else {
        sweep = {{0.8, 1000}, {0.8, 2000}, {1.1, 1000}, {1.1, 2000},
                 {1.2, 1000}, {1.2, 2000}, {1.3, 1000}, {1.3, 2000}};
      }
      std::vector<std::size_t> ns;
      std::string cell_text;
      for (const auto& c : sweep) {
        ns.push_back(c.n);
        cell_text += fmt::format("{}{:g}:{}", cell_text.empty() ? "" : ";", c.a, c.n);
      }
      PlanOptions shown = ss;
      shown.n = ns;
      const auto reports = surrogate_sweep(plan, model, sweep);
      write_outputs(ss, metadata("sweep-surrogate", shown, plan, {{"cells", cell_text}}), reports);
      print_summary(out, reports, "a");
      return kOk;
    }
  } catch (const PlanError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const DegenerateError& e) {
    err << "error: degenerate sample: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace pickfreeze::cli
