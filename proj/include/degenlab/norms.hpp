#pragma once

#include "degenlab/grid.hpp"

#include <optional>

namespace degenlab {

// Time weight omega(t): constant 1 or |t|^gamma. A_q membership requires
// gamma in (-1, q-1); construction does not enforce it (the divergent case
// is itself an experiment input).
struct TimeWeight {
    enum class Kind { constant_one, power };
    Kind kind = Kind::constant_one;
    double gamma = 0.0;

    static TimeWeight one() { return {}; }
    static TimeWeight power(double gamma) { return {Kind::power, gamma}; }

    double operator()(double t) const;
};

// (p, theta) for the spatial weighted norms, optional (q, omega) for mixed
// norms.
struct NormParams {
    double p = 2.0;
    double theta = 0.0;
    std::optional<double> q;
    std::optional<TimeWeight> time_weight;

    NormParams() = default;
    NormParams(double p_, double theta_);
    double qq() const { return q ? *q : p; }
};

struct NormOptions {
    // When set, fail with truncation_dominated if the outermost cells on
    // either end of the log axis contribute more than `truncation_tol`
    // times the interior integral (silent truncation corrupts the
    // divergence experiments).
    bool check_truncation = true;
    double truncation_tol = 1e-3;
};

// || u ||_{L_{p,theta}} = ( int |u|^p x^{theta-1} dx )^{1/p}, computed as
// int |u(e^s)|^p e^{theta s} ds (times dx' in d=2) with composite 4-point
// Gauss-Legendre per log cell on the cubic interpolant. Contributions are
// accumulated as exp(p log|u| + theta s) so deep grids never form the
// weight and the sample as separate over/underflowing factors.
double weighted_lp_norm(const GridFunction& u, const NormParams& params,
                        const NormOptions& opts = {});

// The three norm components of the second-order weighted Sobolev norm.
struct SobolevTerms {
    double value;   // ||u||
    double grad;    // ||x Du||    (full gradient in d=2)
    double hess;    // ||x^2 D^2 u|| (Frobenius, mixed term counted twice)
};

SobolevTerms weighted_sobolev_terms(const GridFunction& u, int order, const NormParams& params,
                                    const NormOptions& opts = {});

// ( sum_{i<=order} ||x^i D^i u||^p )^{1/p}
double weighted_sobolev_norm(const GridFunction& u, int order, const NormParams& params,
                             const NormOptions& opts = {});

// Internal building block, exposed for the experiments that integrate
// analytic integrands directly: integral over the grid of
// exp(p log|f(s,y)| + theta s) with f evaluated exactly at the Gauss points.
double weighted_power_integral(const GridPtr& grid, double p, double theta,
                               const std::function<double(double, double)>& f_of_s_y);

// Signed integral of f(s,y) e^{theta s} ds dy with exact Gauss evaluations
// (the duality pairings need the sign).
double weighted_integral(const GridPtr& grid, double theta,
                         const std::function<double(double, double)>& f_of_s_y);

// Same weighted power integral for uniformly sampled values (cubic
// interpolation to the Gauss points); returns int exp(p log|v| + theta s).
double weighted_power_integral_samples(const std::vector<double>& v, double s0, double h,
                                       double p, double theta);

} // namespace degenlab
