#pragma once

namespace becgap::meanfield {

// Mean-field (imperfect) Bose gas: gapped kinetic term plus lambda N^2 / 2V.
struct MeanFieldModel {
  int nu = 3;
  double delta = 0.0;   // spectral gap, >= 0
  double lambda = 1.0;  // mean-field coupling, > 0
};

enum class Branch { below_threshold, above_threshold };

struct MeanFieldThermo {
  double pressure = 0.0;
  double total_density = 0.0;
  double condensate_density = 0.0;
  double n2_over_v2 = 0.0;
  Branch branch = Branch::below_threshold;
};

// Condensation threshold mu*(beta) = -delta + lambda rho^P(beta, -delta).
// Throws DivergenceError for delta = 0 in nu <= 2, where the threshold is
// infinite and condensate quantities are undefined.
double mf_threshold(const MeanFieldModel& model, double beta);

// Unique rho_bar >= 0 solving rho = rho^P(beta, mu - lambda rho), with
// effective chemical potential mu - lambda rho_bar <= -delta.  Requires
// mu <= mf_threshold (BranchError otherwise: use the explicit formulas).
double solve_selfconsistent_density(const MeanFieldModel& model, double beta, double mu);

// Full thermodynamic record at (beta, mu); defined for every real mu.
// Exactly at mu = mu* the above-threshold branch is reported (the two
// branches coincide there and the condensate vanishes).
MeanFieldThermo mf_thermo(const MeanFieldModel& model, double beta, double mu);

// Canonical free energy f_lambda^delta(beta, rho) =
//   f^{P,delta}(beta, rho) + lambda rho^2 / 2; convex in rho.
double mf_free_energy(const MeanFieldModel& model, double beta, double rho);

struct LegendrePressure {
  double pressure = 0.0;
  double maximizer = 0.0;
};

// Pressure by numerical Legendre transform
//   sup_{0 <= rho <= rho_max} (mu rho - f_lambda^delta(beta, rho)),
// golden-section on the concave objective.  Requires
// rho_max >= 2 (|mu| + delta) / lambda; throws BracketError if the
// maximiser lands on the upper boundary.  Serves as the independent
// cross-check of the closed-form pressure.
LegendrePressure legendre_pressure_oracle(const MeanFieldModel& model, double beta, double mu,
                                          double rho_max);

// The two pressure branches individually (both callable exactly at the
// threshold, where they agree); mf_thermo selects between them.
double mf_pressure_below(const MeanFieldModel& model, double beta, double mu);
double mf_pressure_above(const MeanFieldModel& model, double beta, double mu);

}  // namespace becgap::meanfield
