#pragma once

#include <vector>

namespace degenlab {

// Modified Bessel function of the second kind K_nu(x) for real nu, x > 0,
// via the integral representation
//   K_nu(x) = int_0^infty e^{-x cosh t} cosh(nu t) dt,
// evaluated as e^{-x} * scaled form; uniformly valid in nu including
// integers. Relative accuracy ~1e-10 for x in [1e-3, 30].
double bessel_k(double nu, double x);

// e^x K_nu(x): integrand e^{-x(cosh t - 1)} cosh(nu t); no underflow for
// large x.
double bessel_k_scaled(double nu, double x);

// Relative defect of the defining equation
//   x^2 K'' + x K' - (x^2 + nu^2) K = 0
// with derivatives by 6th-order central differences of bessel_k.
double bessel_ode_residual(double nu, double x);

// Relative defect of -2 K_nu' = K_{nu-1} + K_{nu+1} (6th-order K').
double bessel_recurrence_residual(double nu, double x);

// Fitted minimal constants for the three envelope regimes:
//   small x, nu != 0 : K_nu(x) <= N x^{-|nu|}        on (0, 1]
//   small x, nu  = 0 : K_0(x)  <= -N log x           on (0, 1/2]
//   large x          : K_nu(x) <= N x^{-1/2} e^{-x}  on [1, x_max]
struct BesselBoundsReport {
    double nu;
    double n_small;     // sup K x^{|nu|} or sup K/(-log x) when nu = 0
    double n_large;     // sup K x^{1/2} e^{x}
    bool pass;          // all fitted constants finite
};

BesselBoundsReport bessel_k_bounds_check(double nu, double x_min = 1e-3, double x_max = 20.0,
                                         int samples = 400);

} // namespace degenlab
