#include <cmath>

#include "becgap/errors.hpp"
#include "becgap/meanfield.hpp"
#include "becgap/perfect_gas.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace becgap::meanfield;
using becgap::bose::perfect_density;
using becgap::bose::perfect_pressure;

namespace {
const MeanFieldModel kRef{3, 1.0, 1.0};  // nu = 3, gap 1, lambda 1
}

TEST_CASE("threshold value and asymptotics") {
  const double rho_gap = perfect_density({3, 1.0, -1.0});
  CHECK(mf_threshold(kRef, 1.0) == doctest::Approx(-1.0 + rho_gap).epsilon(1e-14));
  CHECK(mf_threshold(kRef, 1.0) == doctest::Approx(-0.990381).epsilon(1e-5));

  // Large gap: threshold approaches -delta.
  CHECK(mf_threshold({3, 100.0, 1.0}, 1.0) == doctest::Approx(-100.0).epsilon(1e-12));
  // Weak coupling: threshold approaches -delta.
  CHECK(mf_threshold({3, 1.0, 1e-12}, 1.0) == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(mf_threshold({2, 0.0, 1.0}, 1.0), becgap::DivergenceError);
}

TEST_CASE("self-consistent density") {
  // Gapless reference point: residual of rho = rho^P(1, -1 - rho).
  const MeanFieldModel gapless{3, 0.0, 1.0};
  const double rho = solve_selfconsistent_density(gapless, 1.0, -1.0);
  CHECK(std::abs(rho - perfect_density({3, 1.0, -1.0 - rho})) < 1e-10);

  // At the threshold the solution meets the above-branch value.
  const double mu_star = mf_threshold(kRef, 1.0);
  const double at_kink = solve_selfconsistent_density(kRef, 1.0, mu_star);
  CHECK(at_kink == doctest::Approx(perfect_density({3, 1.0, -1.0})).epsilon(1e-9));
  CHECK(at_kink == doctest::Approx((mu_star + 1.0) / 1.0).epsilon(1e-9));

  // Empty gas limit.
  CHECK(solve_selfconsistent_density(kRef, 1.0, -200.0) < 1e-80);

  CHECK_THROWS_AS(solve_selfconsistent_density(kRef, 1.0, mu_star + 0.1), becgap::BranchError);

  // nu = 2 with a gap is fully supported.
  const MeanFieldModel planar{2, 0.5, 1.0};
  const double rho2 = solve_selfconsistent_density(planar, 1.0, mf_threshold(planar, 1.0) - 0.3);
  CHECK(std::abs(rho2 - perfect_density({2, 1.0, mf_threshold(planar, 1.0) - 0.3 - rho2})) < 1e-10);
}

TEST_CASE("mf_thermo: both branches and the kink") {
  // Above threshold, Theorem 3 values.
  const auto above = mf_thermo(kRef, 1.0, 0.5);
  const double rho_gap = perfect_density({3, 1.0, -1.0});
  CHECK(above.branch == Branch::above_threshold);
  CHECK(above.total_density == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(above.condensate_density == doctest::Approx(1.5 - rho_gap).epsilon(1e-12));
  CHECK(above.condensate_density == doctest::Approx(1.490381).epsilon(1e-5));
  CHECK(above.pressure == doctest::Approx(1.125 + perfect_pressure({3, 1.0, -1.0})).epsilon(1e-14));
  CHECK(above.n2_over_v2 == doctest::Approx(2.25).epsilon(1e-14));

  // Below threshold: no condensate, n2 = rho^2.
  const auto below = mf_thermo(kRef, 1.0, -2.0);
  CHECK(below.branch == Branch::below_threshold);
  CHECK(below.condensate_density == 0.0);
  CHECK(below.n2_over_v2 == doctest::Approx(below.total_density * below.total_density));

  // Exactly at the threshold: condensate vanishes, branches agree.
  const double mu_star = mf_threshold(kRef, 1.0);
  const auto kink = mf_thermo(kRef, 1.0, mu_star);
  CHECK(kink.branch == Branch::above_threshold);
  CHECK(std::abs(kink.condensate_density) < 1e-14);
  CHECK(std::abs(mf_pressure_below(kRef, 1.0, mu_star) - mf_pressure_above(kRef, 1.0, mu_star)) < 1e-9);
  const double rho_below = solve_selfconsistent_density(kRef, 1.0, mu_star);
  CHECK(std::abs(kink.total_density - rho_below) < 1e-9);
}

TEST_CASE("gapless limit reproduces the textbook condensate formula") {
  // nu = 3, delta -> 0: rho_0 = mu/lambda - rho_c above lambda rho_c.
  const double rho_c = becgap::bose::perfect_critical_density(3, 1.0);
  const MeanFieldModel gapless{3, 0.0, 2.0};
  const double mu = 2.0 * rho_c * 3.0;
  const auto t = mf_thermo(gapless, 1.0, mu);
  CHECK(t.condensate_density == doctest::Approx(mu / 2.0 - rho_c).epsilon(1e-12));
  // Small-delta sequence converges to the gapless value.
  double prev_gap = 1.0;
  for (double delta : {1e-2, 1e-4, 1e-6}) {
    const auto td = mf_thermo({3, delta, 2.0}, 1.0, mu);
    const double gap = std::abs(td.condensate_density - t.condensate_density);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-5);

  CHECK_THROWS_AS(mf_thermo({2, 0.0, 1.0}, 1.0, 0.3), becgap::DivergenceError);
}

TEST_CASE("free energy: zero at zero density, exact lambda split, convexity") {
  CHECK(mf_free_energy(kRef, 1.0, 0.0) == 0.0);

  const MeanFieldModel l1{3, 1.0, 0.7};
  const MeanFieldModel l2{3, 1.0, 2.3};
  for (double rho : {0.1, 0.7, 2.0}) {
    CHECK(mf_free_energy(l1, 1.0, rho) - mf_free_energy(l2, 1.0, rho) ==
          doctest::Approx((0.7 - 2.3) * rho * rho / 2.0).epsilon(1e-13));
  }

  const int n = 30;
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = mf_free_energy(kRef, 1.0, 0.01 + 0.1 * i);
  for (int i = 1; i + 1 < n; ++i) CHECK(f[i] <= 0.5 * (f[i - 1] + f[i + 1]) + 1e-11);
}

TEST_CASE("Legendre oracle agrees with the closed-form pressure") {
  for (double beta : {0.1, 1.0}) {
    for (double delta : {0.0, 1.0}) {
      const MeanFieldModel m{3, delta, 1.0};
      const double mu_star = mf_threshold(m, beta);
      for (double mu : {mu_star - 1.0, mu_star - 0.01, mu_star + 0.01, mu_star + 1.0}) {
        CAPTURE(beta);
        CAPTURE(delta);
        CAPTURE(mu);
        const double rho_max = 2.0 * (std::abs(mu) + delta) + 2.0;
        const auto oracle = legendre_pressure_oracle(m, beta, mu, rho_max);
        const double closed = mf_thermo(m, beta, mu).pressure;
        CHECK(std::abs(oracle.pressure - closed) <= 1e-6 * std::abs(closed));
        if (mu > mu_star) {
          CHECK(oracle.maximizer == doctest::Approx((mu + delta) / 1.0).epsilon(1e-5));
        }
      }
    }
  }

  // mu -> -inf: supremum at rho = 0 and vanishing pressure.
  const auto far = legendre_pressure_oracle(kRef, 1.0, -50.0, 102.1);
  CHECK(std::abs(far.pressure) < 1e-8);

  CHECK_THROWS_AS(legendre_pressure_oracle(kRef, 1.0, 0.5, 1.0), becgap::DomainError);
}

TEST_CASE("derivative identities of Theorem 3 (finite differences)") {
  const double h = 1e-4;
  for (double mu : {-2.0, 0.5, 2.0}) {
    CAPTURE(mu);
    const auto t = mf_thermo(kRef, 1.0, mu);
    auto p_mu = [&](double m) { return mf_thermo(kRef, 1.0, m).pressure; };
    auto p_delta = [&](double d) { return mf_thermo({3, d, 1.0}, 1.0, mu).pressure; };
    auto p_lambda = [&](double l) { return mf_thermo({3, 1.0, l}, 1.0, mu).pressure; };
    CHECK(std::abs(oracles::central_difference(p_mu, mu, h) - t.total_density) < 1e-5);
    CHECK(std::abs(oracles::central_difference(p_delta, 1.0, h) - t.condensate_density) < 1e-5);
    CHECK(std::abs(-2.0 * oracles::central_difference(p_lambda, 1.0, h) - t.n2_over_v2) < 1e-5);
  }
}

TEST_CASE("pressure is convex in mu, delta, and -lambda") {
  auto convex_on = [](auto f, double lo, double hi) {
    const int n = 17;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = f(lo + (hi - lo) * i / (n - 1));
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(vals[i] <= 0.5 * (vals[i - 1] + vals[i + 1]) + 1e-10);
    }
  };
  convex_on([&](double mu) { return mf_thermo(kRef, 1.0, mu).pressure; }, -3.0, 2.0);
  convex_on([&](double d) { return mf_thermo({3, d, 1.0}, 1.0, 0.3).pressure; }, 0.0, 3.0);
  convex_on([&](double nl) { return mf_thermo({3, 1.0, -nl}, 1.0, 0.3).pressure; }, -3.0, -0.2);
}
