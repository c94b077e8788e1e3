#include <cmath>

#include "becgap/errors.hpp"
#include "becgap/polylog.hpp"
#include "doctest.h"
#include "oracles.hpp"

using becgap::bose::polylog;

TEST_CASE("polylog trivial and exact values") {
  CHECK(polylog(1.5, 0.0) == 0.0);
  // Li_1 has a closed form.
  CHECK(polylog(1.0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  // zeta(2) = pi^2/6 at z = 1.
  CHECK(polylog(2.0, 1.0) ==
        doctest::Approx(3.14159265358979323846 * 3.14159265358979323846 / 6.0).epsilon(1e-13));
}

TEST_CASE("polylog matches brute-force series on the spec grid") {
  for (double sigma : {1.5, 2.5}) {
    for (double z : {0.1, 0.5, 0.9, 1.0}) {
      CAPTURE(sigma);
      CAPTURE(z);
      CHECK(std::abs(polylog(sigma, z) - oracles::polylog_series(sigma, z)) < 1e-10);
    }
  }
  // The naive 1e6-term partial sum is exact to well below 1e-12 here.
  CHECK(std::abs(polylog(2.5, std::exp(-1.0)) - oracles::polylog_series(2.5, std::exp(-1.0))) < 1e-12);
  CHECK(polylog(1.5, 1.0) == doctest::Approx(2.612375348685488).epsilon(1e-12));
}

TEST_CASE("polylog near-unity expansion agrees with the direct series") {
  // z in (0.99, 1) uses the zeta expansion; z slightly below uses summation.
  // Both must coincide where the series is still affordable.
  for (double sigma : {0.5, 1.5, 2.0, 2.5, 3.0}) {
    for (double z : {0.9905, 0.995, 0.999}) {
      CAPTURE(sigma);
      CAPTURE(z);
      const double expansion = polylog(sigma, z);
      const double series = oracles::polylog_series(sigma, z, 20000000L);
      CHECK(std::abs(expansion - series) < 1e-11);
    }
  }
}

TEST_CASE("polylog is strictly increasing in z") {
  for (double sigma : {0.5, 1.5, 2.5}) {
    double prev = 0.0;
    for (double z = 0.05; z < 1.0; z += 0.05) {
      const double cur = polylog(sigma, z);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("polylog domain errors") {
  CHECK_THROWS_AS(polylog(1.5, -0.1), becgap::DomainError);
  CHECK_THROWS_AS(polylog(1.5, 1.1), becgap::DomainError);
  CHECK_THROWS_AS(polylog(0.0, 0.5), becgap::DomainError);
  CHECK_THROWS_AS(polylog(1.0, 1.0), becgap::DivergenceError);
  CHECK_THROWS_AS(polylog(0.5, 1.0), becgap::DivergenceError);
}
