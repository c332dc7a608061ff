#include <doctest.h>

#include <cmath>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/oracle.hpp"
#include "support.hpp"

using namespace pickfreeze;
using testing::coin;
using testing::two_input;

TEST_CASE("brute force: f = X has index 1, f = Z has index 0") {
  CHECK(brute_force_sobol(two_input([](double x, double) { return x; }, coin(), coin())) == 1.0);
  CHECK(brute_force_sobol(two_input([](double, double z) { return z; }, coin(), coin())) == 0.0);
}

TEST_CASE("brute force: X + Z with Bernoulli(1/2) inputs has index 1/2") {
  // Var(E(Y|X)) = Var(X) = 1/4 and Var(Y) = 1/2.
  CHECK(brute_force_sobol(two_input([](double x, double z) { return x + z; }, coin(), coin())) ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("brute force rejects constant, continuous, stochastic and oversized models") {
  CHECK_THROWS_AS(brute_force_sobol(two_input([](double, double) { return 3.0; }, coin(), coin())),
                  DegenerateError);
  CHECK_THROWS_AS(brute_force_sobol(two_input([](double x, double) { return x; },
                                              InputDistribution::standard_normal(), coin())),
                  ConfigurationError);
  auto noisy = two_input([](double x, double) { return x; }, coin(), coin());
  noisy.perturbation = [](std::span<const double>, Rng& r) { return r.normal(); };
  CHECK_THROWS_AS(brute_force_sobol(noisy), ConfigurationError);

  std::vector<double> v(1001), p(1001, 1.0 / 1001);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  double head = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) head += p[i];
  p.back() = 1.0 - head;
  const auto big = InputDistribution::discrete(v, p);
  CHECK_THROWS_AS(brute_force_sobol(two_input([](double x, double z) { return x + z; }, big, big)),
                  ConfigurationError);
}

TEST_CASE("covariance identity on the shipped discrete examples") {
  const auto sum = cov_identity_check(two_input([](double x, double z) { return x + z; }, coin(), coin()));
  CHECK(sum.lhs == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(sum.rhs == doctest::Approx(0.25).epsilon(1e-15));

  const auto zonly = cov_identity_check(two_input([](double, double z) { return z; }, coin(), coin()));
  CHECK(std::abs(zonly.lhs) < 1e-15);
  CHECK(std::abs(zonly.rhs) < 1e-15);

  // E(Y|X) = X E(Z) = 0 for each X.
  const auto sign = InputDistribution::discrete({-1.0, 1.0}, {0.5, 0.5});
  const auto prod = cov_identity_check(two_input([](double x, double z) { return x * z; }, sign, sign));
  CHECK(std::abs(prod.lhs) < 1e-15);
  CHECK(std::abs(prod.rhs) < 1e-15);
}

TEST_CASE("property: covariance identity and index agree with an independent enumeration") {
  Rng rng = RngStream(2024, 0).engine();
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::random_discrete_model(rng);
    const auto exact = testing::enumerate_moments(m);
    if (exact.var_y < 1e-12L) continue;
    const auto id = cov_identity_check(m.model);
    const double scale = static_cast<double>(exact.var_y);
    CHECK(std::abs(id.lhs - id.rhs) <= 1e-12 * scale);
    CHECK(std::abs(id.lhs - static_cast<double>(exact.var_cond)) <= 1e-12 * scale);
    CHECK(brute_force_sobol(m.model) ==
          doctest::Approx(static_cast<double>(exact.var_cond / exact.var_y)).epsilon(1e-10));
  }
}

TEST_CASE("property: the exact joint law of (Y, Y^X) is exchangeable") {
  Rng rng = RngStream(77, 0).engine();
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testing::random_discrete_model(rng);
    const auto law = pick_freeze_joint_law(m.model);
    double total = 0.0;
    for (const auto& a : law) {
      total += a.prob;
      double mirrored = -1.0;
      for (const auto& b : law)
        if (b.y == a.y_x && b.y_x == a.y) mirrored = b.prob;
      REQUIRE(mirrored >= 0.0);
      CHECK(std::abs(mirrored - a.prob) <= 1e-14);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}
