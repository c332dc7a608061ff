#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pickfreeze/benchmarks.hpp"
#include "pickfreeze/csv.hpp"
#include "pickfreeze/errors.hpp"
#include "pickfreeze/experiments.hpp"
#include "support.hpp"

using namespace pickfreeze;

namespace {

RegisteredModel x_only() {
  RegisteredModel r;
  r.name = "x-only";
  r.model = testing::two_input([](double x, double) { return x; },
                               InputDistribution::standard_normal(),
                               InputDistribution::standard_normal());
  r.blocks = {{"x", {0}, 1.0}, {"z", {1}, 0.0}};
  return r;
}

RegisteredModel constant_in_z() {
  // Y depends on X only through a coin, so small samples can be constant.
  RegisteredModel r;
  r.name = "coin";
  r.model = testing::two_input([](double x, double) { return x; }, testing::coin(),
                               InputDistribution::standard_normal());
  r.blocks = {{"x", {0}, 1.0}};
  return r;
}

std::string records_csv(const CoverageReport& report) {
  std::ostringstream out;
  write_csv_preamble(out, kRecordsSchema, {{"seed", "1"}}, record_columns());
  write_record_rows(out, report);
  return out.str();
}

}  // namespace

TEST_CASE("coverage of f = X is exactly one with point intervals") {
  ExperimentPlan plan;
  plan.blocks = {"x"};
  plan.n = 100;
  plan.replicates = 20;
  const auto report = run_coverage(plan, x_only());
  for (const auto& c : report.cells) {
    CHECK(c.coverage == 1.0);
    CHECK(c.mean_ci_length == 0.0);
  }
  for (const auto& r : report.records) {
    CHECK(r.estimate == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.ci.lower == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.ci.upper == doctest::Approx(1.0).epsilon(1e-14));
  }
  const auto cmp = ci_length_comparison(report);
  REQUIRE(cmp.size() == 1);
  CHECK(cmp[0].scaled_length_s == 0.0);
  CHECK(cmp[0].scaled_length_t == 0.0);
}

TEST_CASE("plan validation") {
  ExperimentPlan plan;
  plan.replicates = 0;
  CHECK_THROWS_AS(run_coverage(plan, x_only()), ConfigurationError);
  plan.replicates = 1;
  plan.n = 1;
  CHECK_THROWS_AS(run_coverage(plan, x_only()), ConfigurationError);
  plan.n = 10;
  plan.alpha = 1.0;
  CHECK_THROWS_AS(run_coverage(plan, x_only()), ConfigurationError);
  plan.alpha = 0.05;
  plan.blocks = {"nope"};
  CHECK_THROWS_AS(run_coverage(plan, x_only()), ConfigurationError);
  plan.blocks = {};
  plan.experiment_id = "a,b";
  CHECK_THROWS_AS(run_coverage(plan, x_only()), ConfigurationError);
}

TEST_CASE("truths come from the discrete oracle when no closed form exists") {
  RegisteredModel r;
  r.name = "sum";
  r.model = testing::two_input([](double x, double z) { return x + z; }, testing::coin(), testing::coin());
  r.blocks = {{"x", {0}, std::nullopt}};
  ExperimentPlan plan;
  plan.n = 50;
  plan.replicates = 3;
  const auto report = run_coverage(plan, r);
  CHECK(report.cells.front().truth == doctest::Approx(0.5));

  RegisteredModel continuous = x_only();
  continuous.blocks[0].exact_index.reset();
  plan.blocks = {"x"};
  CHECK_THROWS_AS(run_coverage(plan, continuous), ConfigurationError);
  CHECK_NOTHROW(run_coverage(plan, continuous, {{"x", 1.0}}));
}

TEST_CASE("degenerate replicates are flagged and count as not covering") {
  ExperimentPlan plan;
  plan.n = 2;
  plan.replicates = 200;
  plan.estimators = {EstimatorKind::S};
  const auto report = run_coverage(plan, constant_in_z());
  const auto& cell = report.cells.front();
  CHECK(cell.degenerate > 0);
  CHECK(cell.covered + cell.degenerate == cell.replicates);
  std::size_t flagged = 0;
  for (const auto& r : report.records) {
    if (!r.degenerate) continue;
    ++flagged;
    CHECK_FALSE(r.contains);
    CHECK(std::isnan(r.estimate));
  }
  CHECK(flagged == cell.degenerate);
  CHECK(cell.coverage == static_cast<double>(cell.covered) / 200.0);
  CHECK(records_csv(report).find(",nan,nan,nan,0,nan,1\n") != std::string::npos);
}

TEST_CASE("coverage reports are identical for every worker count") {
  const auto model = ishigami_model();
  for (MetamodelKind kind : {MetamodelKind::None, MetamodelKind::Gaussian, MetamodelKind::Rkhs}) {
    ExperimentPlan plan;
    plan.n = 300;
    plan.replicates = 12;
    plan.master_seed = 99;
    plan.metamodel.kind = kind;
    plan.metamodel.beta = 0.5;
    plan.metamodel.a = 0.5;
    plan.workers = 1;
    const std::string one = records_csv(run_coverage(plan, model));
    for (int w : {2, 4}) {
      plan.workers = w;
      CHECK(records_csv(run_coverage(plan, model)) == one);
    }
  }
}

TEST_CASE("replicate r depends only on its own stream") {
  const auto model = ishigami_model();
  ExperimentPlan plan;
  plan.n = 200;
  plan.replicates = 10;
  const auto ten = run_coverage(plan, model);
  plan.replicates = 4;
  const auto four = run_coverage(plan, model);
  for (std::size_t i = 0; i < four.records.size(); ++i) {
    CHECK(four.records[i].estimate == ten.records[i].estimate);
    CHECK(four.records[i].ci.upper == ten.records[i].ci.upper);
  }
  // Selecting a subset of blocks does not change a block's numbers.
  plan.blocks = {"x3"};
  const auto only3 = run_coverage(plan, model);
  CHECK(only3.records[0].estimate == four.records[4].estimate);
}

TEST_CASE("learning budget is checked before any compute") {
  const auto model = ishigami_model();
  ExperimentPlan plan;
  plan.metamodel.kind = MetamodelKind::NadarayaWatson;
  plan.metamodel.a = 1.3;
  plan.n = 2000;  // n = 19559
  plan.learning_cap = 19558;
  plan.replicates = 1000000;  // would take forever if anything ran
  CHECK_THROWS_AS(run_coverage(plan, model), PlanError);

  plan.metamodel.kind = MetamodelKind::Rkhs;
  plan.learning_cap = 100;
  CHECK_THROWS_AS(surrogate_sweep(plan, model, std::vector<SweepCell>{{0.4, 3000}, {0.8, 4000}}),
                  PlanError);
  CHECK(plan_learning_size(plan) == learning_size_rkhs(1.3, 2000));
}

TEST_CASE("sweeps produce one report per grid value") {
  const auto model = ishigami_model();
  ExperimentPlan plan;
  plan.n = 200;
  plan.replicates = 5;
  plan.metamodel.kind = MetamodelKind::Weibull;
  const auto betas = beta_sweep(plan, model, {0.5, 1.5});
  REQUIRE(betas.size() == 2);
  CHECK(betas[0].a_or_beta == 0.5);
  CHECK(betas[1].a_or_beta == 1.5);
  CHECK_THROWS_AS(beta_sweep(plan, model, {}), ConfigurationError);

  plan.metamodel.kind = MetamodelKind::Rkhs;
  const auto cells = surrogate_sweep(plan, model, std::vector<double>{0.4, 0.5},
                                     std::vector<std::size_t>{100, 200});
  REQUIRE(cells.size() == 4);
  CHECK(cells[3].learning_size == learning_size_rkhs(0.5, 200));
  CHECK(cells[3].plan.n == 200);
  CHECK_THROWS_AS(beta_sweep(plan, model, {1.0}), ConfigurationError);
  plan.metamodel.kind = MetamodelKind::Gaussian;
  CHECK_THROWS_AS(surrogate_sweep(plan, model, std::vector<SweepCell>{{0.4, 100}}), ConfigurationError);
}

TEST_CASE("paired lengths use identical samples for S and T") {
  const auto model = ishigami_model();
  ExperimentPlan plan;
  plan.n = 2000;
  plan.replicates = 40;
  plan.estimators = {EstimatorKind::T};
  const auto cmp = ci_length_comparison(plan, model);
  REQUIRE(cmp.size() == 3);
  CHECK(cmp[0].scaled_length_t < cmp[0].scaled_length_s);
  CHECK(cmp[1].scaled_length_t < cmp[1].scaled_length_s);
  CHECK(std::abs(cmp[2].relative_difference) < 0.05);
}

TEST_CASE("csv files: schema header, append safety, fixed columns") {
  const auto dir = std::filesystem::temp_directory_path() / "pickfreeze_csv_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "records.csv";

  ExperimentPlan plan;
  plan.n = 50;
  plan.replicates = 2;
  plan.blocks = {"x1"};
  plan.estimators = {EstimatorKind::T};
  const auto report = run_coverage(plan, ishigami_model());
  append_records_csv(path, {{"master_seed", "1"}}, {report});
  append_records_csv(path, {{"master_seed", "1"}}, {report});

  std::ifstream in(path);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  CHECK(lines[0] == "# schema: pickfreeze-records/1");
  CHECK(lines[1] == "# master_seed = 1");
  CHECK(lines[2] ==
        "experiment_id,replicate,block,estimator,N,n,a_or_beta,estimate,ci_lower,ci_upper,"
        "contains,ci_length,degenerate");
  std::size_t headers = 0, rows = 0;
  for (const auto& l : lines) {
    if (l.rfind("experiment_id,", 0) == 0) ++headers;
    else if (l[0] != '#') ++rows;
  }
  CHECK(headers == 1);
  CHECK(rows == 4);

  const auto summary = dir / "summary.csv";
  append_summary_csv(summary, {}, {report});
  CHECK_THROWS_AS(append_records_csv(summary, {}, {report}), ConfigurationError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("metamodel kind names round-trip") {
  for (auto k : {MetamodelKind::None, MetamodelKind::Gaussian, MetamodelKind::Weibull,
                 MetamodelKind::Rkhs, MetamodelKind::NadarayaWatson})
    CHECK(parse_metamodel_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_metamodel_kind("kriging"), ConfigurationError);
}
