#pragma once

#include "degenlab/grid.hpp"
#include "degenlab/norms.hpp"

#include <map>
#include <string>
#include <vector>

namespace degenlab {

// Cutoff family for the endpoint experiment:
//   eta_n = 1 on (1/n, inf), 0 on (0, 1/(2n)), log-uniform smooth step in
//   between, tau_n(x) = eta_n(x^delta). Satisfies x|tau_n'| <= C delta and
//   x^2|tau_n''| <= C delta with a single C across the family.
struct CutoffFamily {
    double delta = 0.5;

    double eta(double y, double n) const;
    double eta_d1(double y, double n) const;
    double eta_d2(double y, double n) const;

    double tau(double x, double n) const;      // eta_n(x^delta)
    double tau_d1(double x, double n) const;
    double tau_d2(double x, double n) const;

    // max over a log sample of x|tau'|/delta and x^2|tau''|/delta
    double derivative_bound_constant(double n, double s_min, double s_max,
                                     int samples = 4000) const;
};

struct Curve {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct SharpnessVerdict {
    std::string experiment;
    bool pass = false;
    std::map<std::string, double> details; // fitted slopes, rates, thresholds
    std::vector<Curve> curves;             // raw curve data
    std::vector<std::string> notes;
};

// Endpoint theta = alpha p experiment for L = -x_d^2 Lap - x_d D_d + c in
// d = 2: u = x_d^{-alpha} w(x') zeta(x_d), truncated by tau_n. Checks
//   - slope of ||tau_n u||^p vs log n scales like 1/delta across delta_list,
//   - the dominant commutator term ||x^2 tau_n' D_d u||^p is flat in n and
//     scales like delta^{p-1} across delta_list,
//   - ||f_n||^p stays below a fitted multiple of ||f||^p + delta^{p-1} log(2n),
//   - ||tau_n u|| / ||f_n|| strictly increasing over n_list,
//   - at an interior control theta the same ratio stays bounded,
// each within the frozen tolerances. Also records the d=1 a priori ratio
// blow-up curve approaching theta = alpha p.
SharpnessVerdict hardy_endpoint_experiment(double p, double c,
                                           const std::vector<double>& delta_list,
                                           const std::vector<double>& n_list);

// Divergence of the space-time norm for theta outside [-p sqrt(c/a),
// p sqrt(c/a)]: fitted exponential rate of the growth curve matches
// (a/p) theta^2 - c p within rate_tol, and the interior control curve is
// bounded.
SharpnessVerdict parabolic_divergence_experiment(double a, double c, double p, double theta,
                                                 const std::vector<double>& T_list,
                                                 double control_theta = 0.0,
                                                 double rate_tol = 0.10);

// d = 2 kernel element above the range: u(x', x_d) synthesized from
// K_{sqrt(c)}(|xi| x_d) against a bump eta supported in 1 <= |xi| <= 2.
// Checks the interior residual ||L u||/||u|| < 1e-5, stability of the
// H^2_{p,theta} norm under grid deepening for theta > beta p, and >= 2x
// growth per deepening of the control norm at theta_control < beta p.
SharpnessVerdict nonuniqueness_2d(double c, double p, double theta, double theta_control);

// | int (L u) v dx - int u (L* v) dx | / scale for compactly supported
// pairs, with L* = -x_d^2 Lap - 3 x_d D_d + (c-1); also checks the adjoint
// indicial roots sqrt(c)+1, -sqrt(c)+1.
SharpnessVerdict adjoint_identity_check(double c, int pairs, std::uint64_t seed);

// discrepancy of a single pair (u, v must vanish within 3 cells of the
// boundary, else support_violation)
double adjoint_pairing_discrepancy(double c, const GridFunction& u, const GridFunction& v);

} // namespace degenlab
