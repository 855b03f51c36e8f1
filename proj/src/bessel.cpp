#include "degenlab/bessel.hpp"

#include "degenlab/errors.hpp"
#include "degenlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace degenlab {

namespace {

double integrand_t_max(double nu, double x) {
    // smallest t with x(cosh t - 1) - |nu| t > 50, found by doubling
    const double anu = std::abs(nu);
    double t = 1.0;
    while (t < 100.0 && x * (std::cosh(t) - 1.0) - anu * t < 50.0) t *= 1.5;
    return std::min(t, 100.0);
}

} // namespace

double bessel_k_scaled(double nu, double x) {
    if (!(x > 0.0)) throw Error(ErrorCode::invalid_range, "bessel_k needs x > 0");
    const double anu = std::abs(nu); // K_{-nu} = K_nu
    const auto f = [anu, x](double t) {
        return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(anu * t);
    };
    // composite Gauss panels at spacing ~0.05 sit at the rounding floor for
    // this analytic integrand; the difference checks need that headroom
    const double t_max = integrand_t_max(anu, x);
    const int cells = std::max(64, static_cast<int>(t_max / 0.05) + 1);
    return integrate(f, 0.0, t_max, cells);
}

double bessel_k(double nu, double x) {
    return std::exp(-x) * bessel_k_scaled(nu, x);
}

double bessel_ode_residual(double nu, double x) {
    const double h = 0.01 * std::min(x, 1.0);
    double k[7];
    for (int j = -3; j <= 3; ++j) k[j + 3] = bessel_k(nu, x + j * h);
    const double d1 =
        (-k[0] + 9.0 * k[1] - 45.0 * k[2] + 45.0 * k[4] - 9.0 * k[5] + k[6]) / (60.0 * h);
    const double d2 = (2.0 * k[0] - 27.0 * k[1] + 270.0 * k[2] - 490.0 * k[3] + 270.0 * k[4] -
                       27.0 * k[5] + 2.0 * k[6]) /
                      (180.0 * h * h);
    const double t1 = x * x * d2;
    const double t2 = x * d1;
    const double t3 = -(x * x + nu * nu) * k[3];
    const double denom = std::abs(t1) + std::abs(t2) + std::abs(t3) + 1e-300;
    return std::abs(t1 + t2 + t3) / denom;
}

double bessel_recurrence_residual(double nu, double x) {
    const double h = 0.01 * std::min(x, 1.0);
    double k[7];
    for (int j = -3; j <= 3; ++j) k[j + 3] = bessel_k(nu, x + j * h);
    const double d1 =
        (-k[0] + 9.0 * k[1] - 45.0 * k[2] + 45.0 * k[4] - 9.0 * k[5] + k[6]) / (60.0 * h);
    const double lhs = -2.0 * d1;
    const double rhs = bessel_k(nu - 1.0, x) + bessel_k(nu + 1.0, x);
    return std::abs(lhs - rhs) / (std::abs(rhs) + 1e-300);
}

BesselBoundsReport bessel_k_bounds_check(double nu, double x_min, double x_max, int samples) {
    if (!(x_min > 0.0 && x_max > 1.0 && x_min < 1.0))
        throw Error(ErrorCode::invalid_range, "bounds check needs x_min in (0,1), x_max > 1");
    BesselBoundsReport r{nu, 0.0, 0.0, false};
    const double small_hi = (nu == 0.0) ? 0.5 : 1.0;
    for (int i = 0; i <= samples; ++i) {
        const double x =
            x_min * std::exp(std::log(small_hi / x_min) * static_cast<double>(i) / samples);
        const double k = bessel_k(nu, x);
        const double env = (nu == 0.0) ? -std::log(x) : std::pow(x, -std::abs(nu));
        r.n_small = std::max(r.n_small, k / env);
    }
    for (int i = 0; i <= samples; ++i) {
        const double x = 1.0 + (x_max - 1.0) * static_cast<double>(i) / samples;
        // K x^{1/2} e^{x} without the underflowing factor pair
        r.n_large = std::max(r.n_large, bessel_k_scaled(nu, x) * std::sqrt(x));
    }
    r.pass = std::isfinite(r.n_small) && std::isfinite(r.n_large) && r.n_small > 0.0 &&
             r.n_large > 0.0;
    return r;
}

} // namespace degenlab
