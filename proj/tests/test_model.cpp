#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "pickfreeze/benchmarks.hpp"
#include "pickfreeze/errors.hpp"
#include "pickfreeze/model.hpp"
#include "pickfreeze/parallel.hpp"
#include "pickfreeze/sampling.hpp"
#include "pickfreeze/summation.hpp"
#include "support.hpp"

using namespace pickfreeze;

namespace {

struct WorkerGuard {
  explicit WorkerGuard(int w) : saved(default_workers()) { set_default_workers(w); }
  ~WorkerGuard() { set_default_workers(saved); }
  int saved;
};

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const double ma = kahan_mean(a), mb = kahan_mean(b);
  KahanSum sab, saa, sbb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab.value() / std::sqrt(saa.value() * sbb.value());
}

}  // namespace

TEST_CASE("input laws validate their parameters") {
  CHECK_THROWS_AS(InputDistribution::uniform(1.0, 1.0), ConfigurationError);
  CHECK_THROWS_AS(InputDistribution::uniform(2.0, 1.0), ConfigurationError);
  CHECK_THROWS_AS(InputDistribution::weibull(0.0, 1.0), ConfigurationError);
  CHECK_THROWS_AS(InputDistribution::weibull(1.0, -1.0), ConfigurationError);
  CHECK_THROWS_AS(InputDistribution::discrete({1, 2}, {0.5, 0.6}), ConfigurationError);
  CHECK_THROWS_AS(InputDistribution::discrete({1, 2}, {-0.5, 1.5}), ConfigurationError);
  CHECK_THROWS_AS(InputDistribution::discrete({}, {}), ConfigurationError);
  CHECK_NOTHROW(InputDistribution::discrete({1, 2, 3}, {0.2, 0.3, 0.5}));
}

TEST_CASE("sample_inputs: point mass and uniform support") {
  const std::vector<InputDistribution> point{InputDistribution::discrete({3.0}, {1.0})};
  const Matrix m = sample_inputs(point, 2, RngStream(1, 0));
  CHECK(m.rows == 2);
  CHECK(m(0, 0) == 3.0);
  CHECK(m(1, 0) == 3.0);

  const std::vector<InputDistribution> u{InputDistribution::uniform(-std::numbers::pi, std::numbers::pi)};
  const Matrix d = sample_inputs(u, 10000, RngStream(1, 1));
  for (double v : d.data) {
    REQUIRE(v >= -std::numbers::pi);
    REQUIRE(v <= std::numbers::pi);
  }
}

TEST_CASE("discrete sampling matches the probabilities") {
  const std::vector<InputDistribution> law{InputDistribution::discrete({-1, 0, 5}, {0.2, 0.3, 0.5})};
  const Matrix m = sample_inputs(law, 100000, RngStream(4, 0));
  int counts[3] = {0, 0, 0};
  for (double v : m.data) counts[v < -0.5 ? 0 : (v < 0.5 ? 1 : 2)]++;
  CHECK(counts[0] / 1e5 == doctest::Approx(0.2).epsilon(0.03));
  CHECK(counts[1] / 1e5 == doctest::Approx(0.3).epsilon(0.03));
  CHECK(counts[2] / 1e5 == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("model spec invariants are validated") {
  auto m = testing::two_input([](double x, double) { return x; }, testing::coin(), testing::coin());
  CHECK_NOTHROW(m.validate());
  m.x_indices = {0, 1};
  CHECK_THROWS_AS(m.validate(), ConfigurationError);
  m.x_indices = {};
  CHECK_THROWS_AS(m.validate(), ConfigurationError);
  m.x_indices = {2};
  CHECK_THROWS_AS(m.validate(), ConfigurationError);
  CHECK_THROWS_AS(m.with_block({0, 1}), ConfigurationError);
  CHECK(m.with_block({1}).z_indices() == std::vector<std::size_t>{0});
}

TEST_CASE("pick-freeze: output depending only on X gives identical pairs") {
  const auto m = testing::two_input([](double x, double) { return x; },
                                    InputDistribution::standard_normal(),
                                    InputDistribution::standard_normal());
  const auto s = sample_pick_freeze(m, 1000, RngStream(1, 0));
  CHECK(s.y == s.y_x);
}

TEST_CASE("pick-freeze: output depending only on Z gives uncorrelated pairs") {
  const auto m = testing::two_input([](double, double z) { return z; },
                                    InputDistribution::standard_normal(),
                                    InputDistribution::standard_normal());
  const auto s = sample_pick_freeze(m, 1000000, RngStream(2, 0));
  CHECK(std::abs(correlation(s.y, s.y_x)) < 0.01);
}

TEST_CASE("pick-freeze pairs regenerate from the seed") {
  const auto model = ishigami_model().model;
  const auto s = sample_pick_freeze(model, 10000, RngStream(17, 3));
  const auto again = sample_pick_freeze(model, 10000, RngStream(17, 3));
  CHECK(s.y == again.y);
  CHECK(s.y_x == again.y_x);

  // Entry i is f(X_i, Z_i), f(X_i, Z_i'): rebuild pair 5 by hand from its
  // substream, drawing x, then the redrawn Z coordinates.
  Rng engine = RngStream(17, 3).substream(5).engine();
  std::vector<double> x(3), xp(3);
  for (std::size_t j = 0; j < 3; ++j) x[j] = model.input_laws[j].sample(engine);
  xp = x;
  for (std::size_t j : model.z_indices()) xp[j] = model.input_laws[j].sample(engine);
  CHECK(s.y[5] == ishigami(x));
  CHECK(s.y_x[5] == ishigami(xp));
  CHECK(xp[0] == x[0]);
}

TEST_CASE("parallel and serial pick-freeze kernels agree bit for bit") {
  const auto model = ishigami_model().for_block("x2");
  const auto serial = sample_pick_freeze_serial(model, 20001, RngStream(5, 1));
  for (int w : {1, 2, 4}) {
    WorkerGuard guard(w);
    const auto par = sample_pick_freeze(model, 20001, RngStream(5, 1));
    CHECK(par.y == serial.y);
    CHECK(par.y_x == serial.y_x);
    const auto laws = model.input_laws;
    CHECK(sample_inputs(laws, 999, RngStream(3, 3)).data ==
          sample_inputs_serial(laws, 999, RngStream(3, 3)).data);
  }
}

TEST_CASE("non-finite model output is an evaluation error carrying the input") {
  const auto m = testing::two_input(
      [](double x, double) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x; },
      testing::coin(), testing::coin());
  for (int w : {1, 4}) {
    WorkerGuard guard(w);
    try {
      sample_pick_freeze(m, 100, RngStream(1, 1));
      FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
      REQUIRE(e.input().size() == 2);
      CHECK(e.input()[0] == 1.0);
    }
  }
}

TEST_CASE("pick-freeze sample validates its shape") {
  CHECK_THROWS_AS(PickFreezeSample({1.0}, {1.0}), ConfigurationError);
  CHECK_THROWS_AS(PickFreezeSample({1.0, 2.0}, {1.0}), ConfigurationError);
  const auto m = testing::two_input([](double x, double) { return x; }, testing::coin(), testing::coin());
  CHECK_THROWS_AS(sample_pick_freeze(m, 1, RngStream(1, 1)), ConfigurationError);
}

TEST_CASE("registry resolves names, parameters and blocks") {
  const auto& reg = ModelRegistry::builtin();
  CHECK(reg.contains("ishigami"));
  CHECK(reg.contains("linear-gaussian"));
  const auto lg = reg.make("linear-gaussian:a=2,b=1");
  CHECK(*lg.block("x").exact_index == doctest::Approx(0.8));
  CHECK(*lg.block("z").exact_index == doctest::Approx(0.2));
  CHECK_THROWS_AS(reg.make("nope"), ConfigurationError);
  CHECK_THROWS_AS(reg.make("linear-gaussian:c=1"), ConfigurationError);
  CHECK_THROWS_AS(reg.make("linear-gaussian:a="), ConfigurationError);
  CHECK_THROWS_AS(reg.make("ishigami").block("x4"), ConfigurationError);
  CHECK_THROWS_AS(reg.make("linear-gaussian:a=0,b=0"), DegenerateError);

  ModelRegistry custom;
  custom.add("const-x", [](const ModelParams&) {
    RegisteredModel r;
    r.name = "const-x";
    r.model = testing::two_input([](double x, double) { return x; }, testing::coin(), testing::coin());
    r.blocks = {{"x", {0}, 1.0}};
    return r;
  });
  CHECK(custom.make("const-x").blocks.size() == 1);
  CHECK(custom.names() == std::vector<std::string>{"const-x"});
}
