#include "becgap/polylog.hpp"

#include <cmath>
#include <cstdlib>

#include "becgap/errors.hpp"

namespace becgap::bose {

namespace {

constexpr double kSeriesSwitch = 0.99;
constexpr double kTailTol = 1e-13;

bool nearly_integer(double x) {
  return std::abs(x - std::round(x)) < 1e-12;
}

// Direct series, valid for z <= kSeriesSwitch.  The remainder after the
// n-th term is below z^(n+1) / ((n+1)^sigma (1-z)).
double series(double sigma, double z) {
  double sum = 0.0;
  double zpow = 1.0;
  for (long n = 1; n <= 20000000L; ++n) {
    zpow *= z;
    const double term = zpow / std::pow(static_cast<double>(n), sigma);
    sum += term;
    if (term / (1.0 - z) < kTailTol) return sum;
  }
  throw AccuracyError("polylog series did not meet its tail bound");
}

// Expansion around z = 1 in t = -ln z, non-integer sigma:
//   Li_s(e^-t) = Gamma(1-s) t^(s-1) + sum_k zeta(s-k) (-t)^k / k!
double near_unity_noninteger(double sigma, double t) {
  double acc = std::tgamma(1.0 - sigma) * std::pow(t, sigma - 1.0);
  double tpow = 1.0;  // (-t)^k / k!
  int small_streak = 0;
  for (int k = 0; k <= 80; ++k) {
    const double term = std::riemann_zeta(sigma - k) * tpow;
    acc += term;
    // Trivial zeros of zeta give isolated zero terms; require two
    // consecutive negligible terms before stopping.
    small_streak = (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) ? small_streak + 1 : 0;
    if (small_streak >= 2) break;
    tpow *= -t / (k + 1);
  }
  return acc;
}

// Same expansion at integer s >= 2, where the k = s-1 term degenerates to
//   t^(s-1)/(s-1)! * (H_{s-1} - ln t).
double near_unity_integer(int s, double t) {
  double harmonic = 0.0;
  double factorial = 1.0;
  for (int j = 1; j <= s - 1; ++j) {
    harmonic += 1.0 / j;
    factorial *= j;
  }
  double acc = std::pow(-t, s - 1) / factorial * (harmonic - std::log(t));
  double tpow = 1.0;
  int small_streak = 0;
  for (int k = 0; k <= 80; ++k) {
    if (k != s - 1) {
      const double term = std::riemann_zeta(static_cast<double>(s - k)) * tpow;
      acc += term;
      small_streak = (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) ? small_streak + 1 : 0;
      if (small_streak >= 2) break;
    }
    tpow *= -t / (k + 1);
  }
  return acc;
}

}  // namespace

double polylog(double sigma, double z) {
  if (!(sigma > 0.0)) throw DomainError("polylog: sigma must be positive");
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("polylog: z must lie in [0, 1]");
  if (z == 0.0) return 0.0;

  const bool sigma_is_integer = nearly_integer(sigma);
  if (sigma_is_integer && std::llround(sigma) == 1) {
    if (z == 1.0) throw DivergenceError("polylog: Li_1 diverges at z = 1");
    return -std::log1p(-z);
  }
  if (z == 1.0) {
    if (sigma <= 1.0) throw DivergenceError("polylog: series diverges at z = 1 for sigma <= 1");
    return std::riemann_zeta(sigma);
  }
  if (z <= kSeriesSwitch) return series(sigma, z);

  const double t = -std::log(z);
  if (sigma_is_integer) return near_unity_integer(static_cast<int>(std::llround(sigma)), t);
  return near_unity_noninteger(sigma, t);
}

}  // namespace becgap::bose
