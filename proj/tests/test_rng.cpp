#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "pickfreeze/distribution.hpp"
#include "pickfreeze/rng.hpp"
#include "pickfreeze/summation.hpp"

using namespace pickfreeze;

TEST_CASE("same stream identity reproduces the same sequence") {
  Rng a = RngStream(42, 7).engine();
  Rng b = RngStream(42, 7).engine();
  for (int i = 0; i < 1000; ++i) CHECK(a() == b());
}

TEST_CASE("reference values pin the generator across platforms") {
  // Changing seeding or the engine changes these and with them every
  // recorded experiment output.
  Rng a = RngStream(1, 0).engine();
  CHECK(a() == UINT64_C(8590830552723040845));
  CHECK(a() == UINT64_C(12357174740296442684));
  CHECK(RngStream(1, 0).substream(3).engine()() == UINT64_C(15355697119921919576));
}

TEST_CASE("distinct streams and substreams have distinct keys") {
  std::set<std::uint64_t> keys;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const RngStream parent(9, s);
    keys.insert(parent.key());
    for (std::uint64_t c = 0; c < 50; ++c) keys.insert(parent.substream(c).key());
  }
  CHECK(keys.size() == 50 + 50 * 50);
}

TEST_CASE("sibling streams are uncorrelated") {
  const std::size_t n = 200000;
  Rng a = RngStream(3, 0).engine();
  Rng b = RngStream(3, 1).engine();
  double sab = 0, sa = 0, sb = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a.uniform(), y = b.uniform();
    sa += x;
    sb += y;
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  const double cov = sab / n - (sa / n) * (sb / n);
  const double corr = cov / std::sqrt((saa / n - sa * sa / n / n) * (sbb / n - sb * sb / n / n));
  CHECK(std::abs(corr) < 0.01);
}

TEST_CASE("uniform draws stay in range and have the right mean") {
  Rng r = RngStream(5, 5).engine();
  KahanSum s;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double o = r.uniform_open();
    REQUIRE(o > 0.0);
    REQUIRE(o < 1.0);
    s += u;
  }
  CHECK(s.value() / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("below is bounded and roughly uniform") {
  Rng r = RngStream(11, 0).engine();
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto k = r.below(7);
    REQUIRE(k < 7);
    ++counts[k];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  CHECK(r.below(1) == 0);
}

TEST_CASE("normal draws have unit variance") {
  Rng r = RngStream(2, 2).engine();
  KahanSum s, s2;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = r.normal();
    s += z;
    s2 += z * z;
  }
  CHECK(std::abs(s.value() / n) < 0.01);
  CHECK(s2.value() / n == doctest::Approx(1.0).epsilon(0.015));
}

TEST_CASE("weibull(1, 1/2) mean over 1e6 draws is 2") {
  // E W = scale * Gamma(1 + 1/shape) = Gamma(3) = 2.
  Rng r = RngStream(8, 0).engine();
  KahanSum s;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) s += sample_weibull(r, 1.0, 0.5);
  CHECK(std::abs(s.value() / n - std::tgamma(3.0)) < 0.02);
}
