#pragma once

#include <limits>

namespace becgap::bose {

// Evaluation point in reduced units: single-particle energy eps_k = k^2
// (hbar^2/2m = 1) and k_B = 1, so beta is the inverse temperature and mu
// the chemical potential.
struct ThermoState {
  int nu = 3;        // spatial dimension, >= 1
  double beta = 1.0; // > 0
  double mu = 0.0;
};

struct PerfectGasPoint {
  double pressure = 0.0;
  double density = 0.0;
};

// (4 pi beta)^(-nu/2), the inverse cube (nu-cube) of the thermal wavelength.
double inverse_thermal_volume(int nu, double beta);

// Pressure of the gapless perfect Bose gas,
//   p^P(beta, mu) = beta^-1 (4 pi beta)^(-nu/2) Li_{nu/2+1}(e^{beta mu}),
// defined for mu <= 0.
double perfect_pressure(const ThermoState& state);

// Total density of the gapless perfect Bose gas,
//   rho^P(beta, mu) = (4 pi beta)^(-nu/2) Li_{nu/2}(e^{beta mu}),
// defined for mu <= 0 (mu < 0 when nu <= 2, where the mu = 0 value diverges).
double perfect_density(const ThermoState& state);

// Critical (saturation) density.  With delta = 0 this is rho^P(beta, 0),
// finite only for nu > 2; with delta > 0 it is the gapped critical density
// rho^P(beta, -delta), finite in every dimension.
double perfect_critical_density(int nu, double beta, double delta = 0.0);

enum class MuStatus {
  interior,   // rho^P(beta, mu) = rho solved strictly below the cap
  saturated,  // rho >= rho^P(beta, mu_cap); mu pinned at the cap
  empty       // rho = 0; mu = -infinity (sentinel below)
};

struct InvertedMu {
  double mu = 0.0;
  MuStatus status = MuStatus::interior;
};

// Sentinel reported for the empty gas; never fed back into evaluations.
inline constexpr double kEmptyGasMu = -std::numeric_limits<double>::infinity();

// Chemical potential mu_bar <= mu_cap with rho^P(beta, mu_bar) = rho.
// Saturates at mu_cap once rho reaches the capped density, and reports the
// empty-gas sentinel for rho = 0; neither case silently clamps.
InvertedMu invert_density(int nu, double beta, double rho, double mu_cap);

// Free energy of the perfect gas whose zero mode is lowered by delta:
//   f^{P,delta}(beta, rho) = rho*mu_bar - p^P(beta, mu_bar)   rho <= rho^P(beta,-delta)
//                          = -rho*delta - p^P(beta, -delta)   otherwise.
// Continuous and convex in rho.
double perfect_free_energy_gap(int nu, double beta, double rho, double delta);

}  // namespace becgap::bose
