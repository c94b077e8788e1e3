#pragma once

namespace becgap::bose {

// Bose function Li_sigma(z) = sum_{n>=1} z^n / n^sigma for sigma > 0 and
// z in [0, 1], to ~1e-12 absolute accuracy.
//
// Evaluation strategy: direct summation with a geometric tail bound for
// z <= 0.99; for z closer to 1 the series in t = -ln z built from zeta
// values (with the Gamma(1-sigma) t^(sigma-1) singular term, and the
// t^(s-1)(H_{s-1} - ln t) term at integer s), which converges for t < 2*pi.
//
// Throws DomainError for z outside [0,1] or sigma <= 0, and DivergenceError
// at z = 1 when sigma <= 1.
double polylog(double sigma, double z);

}  // namespace becgap::bose
