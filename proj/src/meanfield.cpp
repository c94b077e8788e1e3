#include "becgap/meanfield.hpp"

#include <algorithm>
#include <cmath>

#include "becgap/errors.hpp"
#include "becgap/perfect_gas.hpp"
#include "becgap/root_finding.hpp"

namespace becgap::meanfield {

namespace {

void check_model(const MeanFieldModel& m, double beta) {
  if (m.nu < 1) throw DomainError("mean-field model: nu must be >= 1");
  if (!(m.lambda > 0.0)) throw DomainError("mean-field model: lambda must be positive");
  if (m.delta < 0.0) throw DomainError("mean-field model: delta must be >= 0");
  if (!(beta > 0.0)) throw DomainError("mean-field model: beta must be positive");
}

// rho^P(beta, -delta): the density the perfect gas saturates at.  Infinite
// (and unrepresentable) for delta = 0 in nu <= 2.
double gap_density(const MeanFieldModel& m, double beta) {
  if (m.delta == 0.0 && m.nu <= 2) {
    throw DivergenceError(
        "mean-field gas: rho^P(beta, 0) diverges for nu <= 2; condensate "
        "quantities need delta > 0");
  }
  return bose::perfect_density({m.nu, beta, -m.delta});
}

}  // namespace

double mf_threshold(const MeanFieldModel& model, double beta) {
  check_model(model, beta);
  return -model.delta + model.lambda * gap_density(model, beta);
}

double solve_selfconsistent_density(const MeanFieldModel& model, double beta, double mu) {
  check_model(model, beta);
  const bool gapless_low_dim = (model.delta == 0.0 && model.nu <= 2);
  if (!gapless_low_dim && mu > mf_threshold(model, beta)) {
    throw BranchError("solve_selfconsistent_density: mu is above the condensation threshold");
  }

  // g(rho) = rho - rho^P(beta, mu - lambda rho) is strictly increasing.
  // For rho >= rho_lo the effective chemical potential stays <= -delta, so
  // the perfect-gas density is evaluable; g(rho_lo) <= 0 analytically.
  const double rho_lo = std::max(0.0, (mu + model.delta) / model.lambda);
  double rho_hi;
  if (!gapless_low_dim) {
    rho_hi = std::max(gap_density(model, beta), rho_lo) + 1.0;
  } else {
    // No finite saturation density; push the effective potential to <= -1.
    rho_hi = std::max((mu + 1.0) / model.lambda,
                      bose::perfect_density({model.nu, beta, -1.0}) + 1.0);
  }
  auto excess = [&](double rho) {
    return rho - bose::perfect_density({model.nu, beta, mu - model.lambda * rho});
  };

  if (rho_hi <= rho_lo) return rho_lo;
  const double tol = 1e-13 * std::max(1.0, rho_hi);
  const roots::Bracket br = roots::bisect(excess, rho_lo, rho_hi, tol, 400,
                                          /*lo_sign_known=*/true, /*hi_sign_known=*/false);
  // Fixed-point polish: recovers full relative accuracy when the root is
  // many orders below the bisection's absolute resolution.
  double rho = br.mid();
  double residual = std::abs(excess(rho));
  for (int i = 0; i < 3 && residual > 0.0; ++i) {
    const double candidate =
        bose::perfect_density({model.nu, beta, mu - model.lambda * rho});
    const double mu_eff = mu - model.lambda * candidate;
    if (mu_eff > 0.0 || (mu_eff == 0.0 && model.nu <= 2)) break;
    const double cand_residual = std::abs(excess(candidate));
    if (cand_residual >= residual) break;
    rho = candidate;
    residual = cand_residual;
  }
  return rho;
}

double mf_pressure_below(const MeanFieldModel& model, double beta, double mu) {
  const double rho_bar = solve_selfconsistent_density(model, beta, mu);
  return mu * rho_bar - mf_free_energy(model, beta, rho_bar);
}

double mf_pressure_above(const MeanFieldModel& model, double beta, double mu) {
  check_model(model, beta);
  const double shifted = mu + model.delta;
  return 0.5 * shifted * shifted / model.lambda +
         bose::perfect_pressure({model.nu, beta, -model.delta});
}

MeanFieldThermo mf_thermo(const MeanFieldModel& model, double beta, double mu) {
  check_model(model, beta);
  const double rho_gap = gap_density(model, beta);
  const double mu_star = -model.delta + model.lambda * rho_gap;

  MeanFieldThermo out;
  if (mu >= mu_star) {
    const double rho = (mu + model.delta) / model.lambda;
    out.branch = Branch::above_threshold;
    out.pressure = mf_pressure_above(model, beta, mu);
    out.total_density = rho;
    out.condensate_density = rho - rho_gap;
    out.n2_over_v2 = rho * rho;
  } else {
    const double rho_bar = solve_selfconsistent_density(model, beta, mu);
    out.branch = Branch::below_threshold;
    out.pressure = mu * rho_bar - mf_free_energy(model, beta, rho_bar);
    out.total_density = rho_bar;
    out.condensate_density = 0.0;
    out.n2_over_v2 = rho_bar * rho_bar;
  }
  return out;
}

double mf_free_energy(const MeanFieldModel& model, double beta, double rho) {
  check_model(model, beta);
  if (rho < 0.0) throw DomainError("mf_free_energy: rho must be >= 0");
  return bose::perfect_free_energy_gap(model.nu, beta, rho, model.delta) +
         0.5 * model.lambda * rho * rho;
}

LegendrePressure legendre_pressure_oracle(const MeanFieldModel& model, double beta, double mu,
                                          double rho_max) {
  check_model(model, beta);
  if (!(rho_max >= 2.0 * (std::abs(mu) + model.delta) / model.lambda)) {
    throw DomainError("legendre_pressure_oracle: rho_max must cover the maximiser");
  }
  auto objective = [&](double rho) { return mu * rho - mf_free_energy(model, beta, rho); };
  const double rho_star =
      roots::golden_max(objective, 0.0, rho_max, 1e-12 * std::max(1.0, rho_max));
  if (rho_max - rho_star < 1e-6 * rho_max) {
    throw BracketError("legendre_pressure_oracle: maximiser at rho_max; enlarge the bracket");
  }
  return {objective(rho_star), rho_star};
}

}  // namespace becgap::meanfield
