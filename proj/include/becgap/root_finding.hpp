#pragma once

#include <cmath>
#include <functional>

#include "becgap/errors.hpp"

namespace becgap::roots {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

// Bisection on a sign change: requires f(lo) <= 0 <= f(hi) (or the caller
// vouches for the signs via the *_known arguments, so endpoints that are
// expensive or singular are never evaluated).  Narrows until the bracket
// width drops below x_tol and returns the final bracket.
inline Bracket bisect(const std::function<double(double)>& f, double lo,
                      double hi, double x_tol, int max_iter = 400,
                      bool lo_sign_known = false, bool hi_sign_known = false) {
  if (!(lo < hi)) throw DomainError("bisect: empty bracket");
  if (!lo_sign_known && f(lo) > 0.0) throw DomainError("bisect: f(lo) > 0");
  if (!hi_sign_known && f(hi) < 0.0) throw DomainError("bisect: f(hi) < 0");
  for (int it = 0; it < max_iter && hi - lo > x_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution reached
    if (f(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

// Golden-section maximisation of a unimodal f on [a, b]; returns the
// abscissa of the maximum located to within x_tol.
inline double golden_max(const std::function<double(double)>& f, double a,
                         double b, double x_tol, int max_iter = 400) {
  constexpr double inv_phi = 0.6180339887498948482;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && b - a > x_tol; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace becgap::roots
