#include "becgap/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "becgap/errors.hpp"
#include "becgap/quadrature.hpp"
#include "becgap/root_finding.hpp"

namespace becgap::potentials {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fritsch-Carlson slopes for a monotone cubic Hermite interpolant.
std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  std::vector<double> h(n - 1), secant(n - 1), d(n);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    secant[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = secant[0];
    return d;
  }
  for (size_t i = 1; i + 1 < n; ++i) {
    if (secant[i - 1] * secant[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double s0, double s1) {
    double slope = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if (slope * s0 <= 0.0)
      slope = 0.0;
    else if (s0 * s1 <= 0.0 && std::abs(slope) > 3.0 * std::abs(s0))
      slope = 3.0 * s0;
    return slope;
  };
  d[0] = endpoint(h[0], h[1], secant[0], secant[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], secant[n - 2], secant[n - 3]);
  return d;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& d, double r) {
  if (r <= x.front()) return y.front();
  if (r >= x.back()) return 0.0;  // compact support
  const auto it = std::upper_bound(x.begin(), x.end(), r);
  const size_t i = static_cast<size_t>(it - x.begin()) - 1;
  const double h = x[i + 1] - x[i];
  const double t = (r - x[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  return y[i] * (2.0 * t3 - 3.0 * t2 + 1.0) + h * d[i] * (t3 - 2.0 * t2 + t) +
         y[i + 1] * (-2.0 * t3 + 3.0 * t2) + h * d[i + 1] * (t3 - t2);
}

// Radial Fourier kernel Omega_nu(u) with Omega_nu(0) = 1:
//   vhat(q) = S_{nu-1} int r^{nu-1} v(r) Omega_nu(q r) dr.
double radial_kernel(int nu, double u) {
  if (u < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / (2.0 * nu) + u2 * u2 / (8.0 * nu * (nu + 2.0));
  }
  switch (nu) {
    case 1:
      return std::cos(u);
    case 2:
      return std::cyl_bessel_j(0.0, u);
    case 3:
      return std::sin(u) / u;
    default: {
      const double order = 0.5 * nu - 1.0;
      return std::tgamma(0.5 * nu) * std::pow(2.0 / u, order) * std::cyl_bessel_j(order, u);
    }
  }
}

}  // namespace

double sphere_surface(int nu) {
  return 2.0 * std::pow(kPi, 0.5 * nu) / std::tgamma(0.5 * nu);
}

PairPotential PairPotential::gaussian(double amplitude, double width, int nu) {
  if (nu < 1) throw DomainError("PairPotential: dimension must be >= 1");
  if (!(width > 0.0)) throw DomainError("PairPotential: gaussian width must be positive");
  PairPotential v;
  v.kind_ = ProfileKind::gaussian;
  v.nu_ = nu;
  v.amplitude_ = amplitude;
  v.shape_ = width;
  v.finalize();
  return v;
}

PairPotential PairPotential::exponential(double amplitude, double rate, int nu) {
  if (nu < 1) throw DomainError("PairPotential: dimension must be >= 1");
  if (!(rate > 0.0)) throw DomainError("PairPotential: exponential rate must be positive");
  PairPotential v;
  v.kind_ = ProfileKind::exponential;
  v.nu_ = nu;
  v.amplitude_ = amplitude;
  v.shape_ = rate;
  v.finalize();
  return v;
}

PairPotential PairPotential::tabulated(std::vector<double> radii, std::vector<double> values, int nu) {
  if (nu < 1) throw DomainError("PairPotential: dimension must be >= 1");
  if (radii.size() != values.size() || radii.size() < 2) {
    throw DomainError("PairPotential: tabulated profile needs >= 2 (r, v) samples");
  }
  if (radii.front() != 0.0) {
    throw DomainError("PairPotential: tabulated profile must start at r = 0");
  }
  for (size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i]) || !std::isfinite(values[i])) {
      throw DomainError("PairPotential: tabulated profile contains non-finite entries");
    }
    if (i > 0 && radii[i] <= radii[i - 1]) {
      throw DomainError("PairPotential: tabulated radii must be strictly ascending");
    }
  }
  PairPotential v;
  v.kind_ = ProfileKind::tabulated;
  v.nu_ = nu;
  v.tab_r_ = std::move(radii);
  v.tab_v_ = std::move(values);
  v.tab_slope_ = pchip_slopes(v.tab_r_, v.tab_v_);
  v.finalize();
  return v;
}

PairPotential PairPotential::tabulated_from_file(const std::string& path, int nu) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open tabulated potential file: " + path);
  std::vector<double> r, val;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double ri, vi;
    if (!(fields >> ri >> vi)) {
      throw DomainError("tabulated potential file " + path + ": malformed line " +
                        std::to_string(line_no));
    }
    r.push_back(ri);
    val.push_back(vi);
  }
  return tabulated(std::move(r), std::move(val), nu);
}

double PairPotential::operator()(double r) const {
  const double scale = std::pow(vdw_lambda_, nu_);
  const double u = vdw_lambda_ * std::abs(r);
  switch (kind_) {
    case ProfileKind::gaussian:
      return scale * amplitude_ * std::exp(-u * u / (2.0 * shape_ * shape_));
    case ProfileKind::exponential:
      return scale * amplitude_ * std::exp(-shape_ * u);
    case ProfileKind::tabulated:
      return scale * pchip_eval(tab_r_, tab_v_, tab_slope_, u);
  }
  return 0.0;
}

double PairPotential::support_radius(double tail_eps) const {
  if (kind_ == ProfileKind::tabulated) return tab_r_.back() / vdw_lambda_;
  const double ell = (kind_ == ProfileKind::gaussian ? shape_ : 1.0 / shape_) / vdw_lambda_;
  if (amplitude_ == 0.0) return ell;
  const double surface = sphere_surface(nu_);
  double radius = 8.0 * ell;
  // Both analytic profiles decay at least exponentially on the scale ell,
  // so the remaining integral is bounded by ~ S r^(nu-1) |v(r)| ell.
  while (surface * std::pow(radius, nu_ - 1) * std::abs((*this)(radius)) * 2.0 * ell > tail_eps &&
         radius < 1e7 * ell) {
    radius *= 1.25;
  }
  return radius;
}

PairPotential PairPotential::vdw_scaled(double lambda_s) const {
  if (!(lambda_s > 0.0)) throw DomainError("vdw_scale: lambda_s must be positive");
  PairPotential v = *this;
  v.vdw_lambda_ *= lambda_s;
  v.finalize();
  return v;
}

std::string PairPotential::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case ProfileKind::gaussian:
      out << "gaussian:a=" << amplitude_ << ",sigma=" << shape_;
      break;
    case ProfileKind::exponential:
      out << "exponential:a=" << amplitude_ << ",m=" << shape_;
      break;
    case ProfileKind::tabulated:
      out << "tabulated:" << tab_r_.size() << " samples, r_max=" << tab_r_.back();
      break;
  }
  if (vdw_lambda_ != 1.0) out << ",vdw_lambda=" << vdw_lambda_;
  out << ",nu=" << nu_;
  return out.str();
}

namespace {

double scale_hint_for(const PairPotential& v) {
  const double c = std::abs(v.characterization().l1_norm);
  return c > 0.0 ? c : 1.0;
}

double radial_moment(const PairPotential& v, double lo, double hi, bool absolute,
                     double scale_hint, double q = 0.0) {
  if (hi <= lo) return 0.0;
  const int nu = v.dimension();
  auto integrand = [&, nu](double r) {
    double val = v(r) * std::pow(r, nu - 1);
    if (absolute) val = std::abs(val);
    if (q > 0.0) val *= radial_kernel(nu, q * r);
    return val;
  };
  const int segments = std::clamp(static_cast<int>(q * (hi - lo) / 3.0) + 1, 1, 512);
  const auto result = quad::integrate(integrand, lo, hi, 1e-13 * scale_hint, 1e-11, segments);
  return sphere_surface(nu) * result.value;
}

}  // namespace

void PairPotential::finalize() {
  chars_ = Characterization{};
  chars_.v0 = (*this)(0.0);

  // Bootstrap the quadrature scale from a crude estimate before the real
  // characterisation exists.
  const double radius = support_radius(1e-16 * (1.0 + std::abs(chars_.v0)));
  const double crude = std::max(1.0, std::abs(chars_.v0) * std::pow(radius, nu_));
  auto moment = [&](bool absolute) {
    auto integrand = [&](double r) {
      const double val = (*this)(r)*std::pow(r, nu_ - 1);
      return absolute ? std::abs(val) : val;
    };
    return sphere_surface(nu_) * quad::integrate(integrand, 0.0, radius, 1e-13 * crude, 1e-11).value;
  };
  try {
    chars_.vhat0 = moment(false);
    chars_.l1_norm = moment(true);
  } catch (const AccuracyError&) {
    throw DomainError("PairPotential: profile is not numerically integrable");
  }

  if (kind_ == ProfileKind::tabulated) {
    // Certify conditions (a)/(b): nonnegative Fourier transform, maximal at
    // q = 0, and v(0) >= v(x).  Sampled, not assumed.
    if (!(chars_.vhat0 > 0.0)) {
      throw DomainError("tabulated potential rejected: vhat(0) must be positive");
    }
    const double tol = 1e-6 * chars_.vhat0;
    for (int i = 0; i <= 100; ++i) {
      const double q = 0.1 * i;
      const double vq = fourier_at(*this, q);
      if (vq < -tol) {
        throw DomainError("tabulated potential rejected: vhat(q) < 0 near q = " + std::to_string(q));
      }
      if (vq > chars_.vhat0 + tol) {
        throw DomainError("tabulated potential rejected: vhat(q) exceeds vhat(0) near q = " +
                          std::to_string(q));
      }
    }
    for (double vi : tab_v_) {
      if (vi > tab_v_.front() + 1e-12 * std::abs(tab_v_.front())) {
        throw DomainError("tabulated potential rejected: v(0) must dominate v(r)");
      }
    }
  }
}

Characterization characterize(const PairPotential& v) { return v.characterization(); }

double fourier_at(const PairPotential& v, double q) {
  if (q < 0.0) throw DomainError("fourier_at: q must be >= 0 (radial symmetry)");
  const double radius = v.support_radius(1e-16 * scale_hint_for(v));
  return radial_moment(v, 0.0, radius, false, scale_hint_for(v), q);
}

double tail_mass(const PairPotential& v, double h) {
  if (!(h > 0.0)) throw DomainError("tail_mass: h must be positive");
  const double radius = v.support_radius(1e-16 * scale_hint_for(v));
  if (h >= radius) return 0.0;
  return 2.0 * radial_moment(v, h, radius, true, scale_hint_for(v));
}

SuperstabilityConstants superstability_constants(const PairPotential& v, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("superstability_constants: epsilon must lie in (0, 1)");
  }
  const Characterization c = v.characterization();
  if (!(c.vhat0 > 0.0)) {
    throw DomainError("superstability_constants: vhat(0) must be positive (condition b)");
  }

  SuperstabilityConstants out;
  out.A = (1.0 - epsilon) * c.vhat0;
  out.B = 0.5 * c.v0;
  out.epsilon = epsilon;

  // Smallest h with delta(h) < eps/4 * vhat0.  delta(h) decreases from
  // 2*l1_norm >= 2*vhat0 at h = 0+, so a sign change always exists.
  const double target = 0.25 * epsilon * c.vhat0;
  double hi = v.support_radius(1e-10 * scale_hint_for(v));
  while (tail_mass(v, hi) >= target) hi *= 2.0;
  auto h_gap = [&](double h) { return target - tail_mass(v, h); };
  out.h = roots::bisect(h_gap, 1e-12 * hi, hi, 1e-6 * hi, 400,
                        /*lo_sign_known=*/true, /*hi_sign_known=*/true)
              .hi;

  // Smallest box side with ||v||_1 ((L+2h)^nu - L^nu) / (L^nu vhat0) < eps/4.
  const int nu = v.dimension();
  auto shell_excess = [&](double L) {
    const double fraction = std::pow(1.0 + 2.0 * out.h / L, nu) - 1.0;
    return 0.25 * epsilon - c.l1_norm * fraction / c.vhat0;
  };
  double L_hi = std::max(out.h, 1e-6);
  while (shell_excess(L_hi) <= 0.0) L_hi *= 2.0;
  out.L_min = roots::bisect(shell_excess, 1e-12 * L_hi, L_hi, 1e-6 * L_hi, 400,
                            /*lo_sign_known=*/true, /*hi_sign_known=*/true)
                  .hi;
  return out;
}

SuperstabilityCheck check_superstability_inequality(const PairPotential& v,
                                                    const Eigen::MatrixXd& points,
                                                    double box_side, double epsilon) {
  const long n = points.rows();
  if (n < 2) throw DomainError("superstability check: need n >= 2 points");
  if (points.cols() != v.dimension()) {
    throw DomainError("superstability check: point dimension does not match the potential");
  }
  if (!(box_side > 0.0)) throw DomainError("superstability check: box side must be positive");
  const double half = 0.5 * box_side + 1e-9;
  if ((points.array().abs() > half).any()) {
    throw DomainError("superstability check: points must lie in the box [-L/2, L/2]^nu");
  }

  SuperstabilityCheck out;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      const double dist = (points.row(i) - points.row(j)).norm();
      if (dist == 0.0) throw DomainError("superstability check: points must be distinct");
      out.lhs += v(dist);
    }
  }
  const Characterization c = v.characterization();
  const double volume = std::pow(box_side, v.dimension());
  out.rhs = -0.5 * c.v0 * n + 0.5 * c.vhat0 * (1.0 - epsilon) * n * n / volume;
  out.holds = out.lhs >= out.rhs;
  return out;
}

PairPotential vdw_scale(const PairPotential& v, double lambda_s) {
  return v.vdw_scaled(lambda_s);
}

}  // namespace becgap::potentials
