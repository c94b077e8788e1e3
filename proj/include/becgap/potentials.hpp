#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace becgap::potentials {

enum class ProfileKind { gaussian, exponential, tabulated };

struct Characterization {
  double v0 = 0.0;      // v(0)
  double vhat0 = 0.0;   // \hat v(0) = integral of v over R^nu
  double l1_norm = 0.0; // integral of |v|
};

// Optimal superstability bundle: the n-body energy obeys
//   sum_{i<j} v(x_i - x_j) >= -B n + A n^2 / (2V)
// with A = (1-eps) vhat0 and B = v0/2, for boxes of side >= L_min, where h
// is the tail cutoff with delta(h)/vhat0 < eps/4.
struct SuperstabilityConstants {
  double A = 0.0;
  double B = 0.0;
  double epsilon = 0.0;
  double h = 0.0;
  double L_min = 0.0;
};

struct SuperstabilityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Radial, integrable, positive-type two-body potential in nu dimensions.
// Built-in profiles (positive-type in every dimension):
//   gaussian(a, sigma):   v(r) = a exp(-r^2 / (2 sigma^2))
//   exponential(a, m):    v(r) = a exp(-m r)
// plus tabulated samples with monotone cubic interpolation and compact
// support.  A Van der Waals scale lambda_s is carried along with the
// profile: v(r) = lambda_s^nu * base(lambda_s * r).
//
// Instances are immutable after construction; the scalar characterisation
// is computed once (by radial quadrature) in the constructor.  Tabulated
// profiles are additionally certified against conditions on the Fourier
// transform (vhat >= 0, vhat(0) maximal) on the q-grid {0, 0.1, ..., 10}
// and rejected if they fail.
class PairPotential {
 public:
  static PairPotential gaussian(double amplitude, double width, int nu);
  static PairPotential exponential(double amplitude, double rate, int nu);
  static PairPotential tabulated(std::vector<double> radii, std::vector<double> values, int nu);
  // Plain-text file, two columns "r value" with ascending r starting at 0;
  // lines beginning with '#' are comments.
  static PairPotential tabulated_from_file(const std::string& path, int nu);

  double operator()(double r) const;
  int dimension() const { return nu_; }
  ProfileKind kind() const { return kind_; }
  double vdw_lambda() const { return vdw_lambda_; }
  const Characterization& characterization() const { return chars_; }

  // Radius beyond which the remaining radial integral of |v| is below
  // tail_eps (for tabulated profiles: the end of the support).
  double support_radius(double tail_eps) const;

  PairPotential vdw_scaled(double lambda_s) const;

  // One-line description used in output provenance headers.
  std::string describe() const;

 private:
  PairPotential() = default;
  void finalize();  // characterisation + certification

  ProfileKind kind_ = ProfileKind::gaussian;
  int nu_ = 3;
  double amplitude_ = 0.0;
  double shape_ = 1.0;  // sigma for gaussian, rate m for exponential
  double vdw_lambda_ = 1.0;
  std::vector<double> tab_r_, tab_v_, tab_slope_;
  Characterization chars_;
};

// Surface area of the unit sphere in nu dimensions, 2 pi^(nu/2) / Gamma(nu/2).
double sphere_surface(int nu);

// Scalar characteristics of v (cached at construction).
Characterization characterize(const PairPotential& v);

// Fourier transform at radial wavenumber q >= 0 via radial quadrature.
double fourier_at(const PairPotential& v, double q);

// delta(h) = 2 * integral over |x| > h of |v|; nonincreasing in h.
double tail_mass(const PairPotential& v, double h);

// Optimal constants of the superstability inequality for tolerance
// eps in (0, 1).  The cubic-box shell volume (L+2h)^nu - L^nu is used.
SuperstabilityConstants superstability_constants(const PairPotential& v, double epsilon);

// Evaluates both sides of the superstability inequality for a set of
// distinct points (rows of `points`) inside the box [-L/2, L/2]^nu.
SuperstabilityCheck check_superstability_inequality(const PairPotential& v,
                                                    const Eigen::MatrixXd& points,
                                                    double box_side, double epsilon);

// Van der Waals scaling v_lambda(x) = lambda_s^nu v(lambda_s x).
PairPotential vdw_scale(const PairPotential& v, double lambda_s);

}  // namespace becgap::potentials
