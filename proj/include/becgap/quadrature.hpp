#pragma once

#include <functional>

namespace becgap::quad {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;   // estimated
  long evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (G7,K15) integration of f on [a, b].
// Splits the interval with the worst error estimate until the summed
// estimate satisfies max(abs_tol, rel_tol * |value|).  Throws AccuracyError
// if the target is not met within max_intervals subdivisions.
// initial_segments > 1 seeds a uniform partition, which helps oscillatory
// integrands reach the asymptotic regime of the error estimator.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int initial_segments = 1, int max_intervals = 4000);

}  // namespace becgap::quad
