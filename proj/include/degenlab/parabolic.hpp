#pragma once

#include "degenlab/grid.hpp"
#include "degenlab/indicial.hpp"
#include "degenlab/norms.hpp"

#include <functional>
#include <vector>

namespace degenlab {

// a0 u_t - x^2 a u_xx + x b u_x + c u + lambda c0 u. Coefficients may
// depend on (t, s) where s = log x; constants in the common case.
struct ParabolicOp1D {
    double a0 = 1.0;
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double lambda = 0.0;
    double c0 = 1.0;

    static ParabolicOp1D constant(double a0, double a, double b, double c, double lambda = 0.0,
                                  double c0 = 1.0);
};

// Space convolution of the half-line model problem after the log
// substitution: value at (t, x), x the log coordinate, of
//   v(t,x) = int_{-infty}^t int_R (2 sqrt(a pi (t-s)))^{-1}
//              e^{-(x-y)^2/(4a(t-s)) - c(t-s)} g(s,y) dy ds
// with g the indicator of (-1,0) x (0,1). The y-integral is an exact
// erf/erfc difference; the time integral uses the t-s = tau^2 substitution
// near the singular endpoint. Zero for t <= -1.
double heat_kernel_solution(double a, double c, double t, double x);

// Crank-Nicolson stepper for the Cauchy problem with u(0,.) = 0 on the log
// grid: a0 v_t - a v_ss + (a+b) v_s + (c + lambda c0) v = g. The grid must
// carry a time axis on [0, T]. Fails with singular_step when a per-step
// pivot underflows.
SpaceTimeFunction solve_parabolic_fd(const ParabolicOp1D& op, const SpaceTimeFunction& f,
                                     const GridPtr& grid);

// Centered-in-time derivative of a space-time sample (one-sided at the
// ends).
SpaceTimeFunction time_derivative(const SpaceTimeFunction& u);

// Iterated norm || t -> ||u(t)||_{L_{p,theta}} ||_{L_q(omega dt)} over the
// grid's time axis; composite Simpson in t, with the local power
// substitution on cells touching t = 0 when omega = |t|^gamma, gamma < 0.
double mixed_norm(const SpaceTimeFunction& u, double q, const NormParams& params,
                  const TimeWeight& omega);

// One point of the weighted-norm growth curve.
struct GrowthPoint {
    double T;
    double norm_p;    // int_{Omega_T} |u|^p x^{theta-1} dx dt  (log-coordinate form)
};

struct GrowthCurve {
    std::vector<GrowthPoint> points;
    double fitted_rate;     // least squares on log increments, last half
    bool bounded;           // increments fell below 1e-6 x running total
    double predicted_rate;  // (a/p) theta^2 - c p
};

// Growth of int |v|^p e^{theta x} dx dt for the kernel solution above;
// T_list must be increasing and positive.
GrowthCurve norm_growth_curve(double a, double c, double p, double theta,
                              const std::vector<double>& T_list);

} // namespace degenlab
