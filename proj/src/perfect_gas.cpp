#include "becgap/perfect_gas.hpp"

#include <cmath>

#include "becgap/errors.hpp"
#include "becgap/polylog.hpp"
#include "becgap/root_finding.hpp"

namespace becgap::bose {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_state(int nu, double beta) {
  if (nu < 1) throw DomainError("dimension nu must be >= 1");
  if (!(beta > 0.0)) throw DomainError("inverse temperature beta must be positive");
}

}  // namespace

double inverse_thermal_volume(int nu, double beta) {
  check_state(nu, beta);
  return std::pow(4.0 * kPi * beta, -0.5 * nu);
}

double perfect_pressure(const ThermoState& state) {
  check_state(state.nu, state.beta);
  if (state.mu > 0.0) throw DomainError("perfect_pressure: mu must be <= 0");
  const double z = std::exp(state.beta * state.mu);
  return polylog(0.5 * state.nu + 1.0, z) * inverse_thermal_volume(state.nu, state.beta) / state.beta;
}

double perfect_density(const ThermoState& state) {
  check_state(state.nu, state.beta);
  if (state.mu > 0.0) throw DomainError("perfect_density: mu must be <= 0");
  const double z = std::exp(state.beta * state.mu);
  if (z == 1.0 && state.nu <= 2) {
    throw DivergenceError("perfect_density: diverges at mu = 0 for nu <= 2");
  }
  return polylog(0.5 * state.nu, z) * inverse_thermal_volume(state.nu, state.beta);
}

double perfect_critical_density(int nu, double beta, double delta) {
  if (delta < 0.0) throw DomainError("perfect_critical_density: delta must be >= 0");
  if (delta == 0.0 && nu <= 2) {
    throw DivergenceError("perfect_critical_density: infinite for nu <= 2 without a gap");
  }
  return perfect_density({nu, beta, -delta});
}

InvertedMu invert_density(int nu, double beta, double rho, double mu_cap) {
  check_state(nu, beta);
  if (rho < 0.0) throw DomainError("invert_density: rho must be >= 0");
  if (mu_cap > 0.0) throw DomainError("invert_density: mu_cap must be <= 0");
  if (rho == 0.0) return {kEmptyGasMu, MuStatus::empty};

  const bool cap_density_finite = (nu > 2) || (mu_cap < 0.0);
  if (cap_density_finite && rho >= perfect_density({nu, beta, mu_cap})) {
    return {mu_cap, MuStatus::saturated};
  }

  // Bracket downward from the cap, then bisect the monotone density.
  double lo = mu_cap - 1.0;
  while (perfect_density({nu, beta, lo}) > rho) lo = mu_cap - 2.0 * (mu_cap - lo);
  auto excess = [&](double mu) { return perfect_density({nu, beta, mu}) - rho; };
  // f(mu_cap) > 0 by the saturation test above (or trivially for an
  // infinite cap density); do not evaluate a possibly divergent endpoint.
  const roots::Bracket br =
      roots::bisect(excess, lo, mu_cap, 1e-12, 2200, /*lo_sign_known=*/true, /*hi_sign_known=*/true);
  return {br.mid(), MuStatus::interior};
}

double perfect_free_energy_gap(int nu, double beta, double rho, double delta) {
  check_state(nu, beta);
  if (rho < 0.0) throw DomainError("perfect_free_energy_gap: rho must be >= 0");
  if (delta < 0.0) throw DomainError("perfect_free_energy_gap: delta must be >= 0");
  if (rho == 0.0) return 0.0;

  const bool cap_density_finite = (nu > 2) || (delta > 0.0);
  if (cap_density_finite && rho > perfect_density({nu, beta, -delta})) {
    return -rho * delta - perfect_pressure({nu, beta, -delta});
  }
  const InvertedMu inv = invert_density(nu, beta, rho, -delta);
  return rho * inv.mu - perfect_pressure({nu, beta, inv.mu});
}

}  // namespace becgap::bose
