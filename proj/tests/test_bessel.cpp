#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degenlab/bessel.hpp"
#include "degenlab/errors.hpp"
#include "degenlab/quadrature.hpp"

#include <cmath>

using namespace degenlab;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> log_samples(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i <= n; ++i)
        out.push_back(lo * std::exp(std::log(hi / lo) * static_cast<double>(i) / n));
    return out;
}
} // namespace

TEST_CASE("half-integer closed form") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    for (double x : log_samples(1e-3, 30.0, 40)) {
        const double exact = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        CHECK(bessel_k(0.5, x) == doctest::Approx(exact).epsilon(1e-12));
    }
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.461068504447).epsilon(1e-9));
}

TEST_CASE("defining equation residual") {
    for (double nu : {0.0, 0.5, 1.0, std::sqrt(2.0)})
        for (double x : log_samples(1e-2, 20.0, 24))
            CHECK(bessel_ode_residual(nu, x) <= 1e-9);
}

TEST_CASE("three-term derivative recurrence") {
    for (double nu : {0.0, 0.5, 1.0, std::sqrt(2.0)})
        for (double x : log_samples(1e-2, 20.0, 24))
            CHECK(bessel_recurrence_residual(nu, x) <= 1e-9);
}

TEST_CASE("symmetry in the order") {
    for (double nu : {0.3, 0.5, 1.2, 2.0})
        for (double x : {0.05, 0.7, 3.0, 15.0})
            CHECK(bessel_k(-nu, x) == doctest::Approx(bessel_k(nu, x)).epsilon(1e-10));
}

TEST_CASE("positivity and monotone decay") {
    for (double nu : {0.0, 0.8, 1.7}) {
        double prev = 1e300;
        for (double x : log_samples(1e-3, 25.0, 60)) {
            const double k = bessel_k(nu, x);
            CHECK(k > 0.0);
            CHECK(k < prev);
            prev = k;
        }
    }
}

TEST_CASE("tail truncation is converged") {
    // doubling the truncation horizon leaves the value unchanged to 1e-12
    for (double nu : {0.0, 1.0, 2.5})
        for (double x : {1e-3, 0.5, 10.0}) {
            const double base = bessel_k_scaled(nu, x);
            const auto f = [nu, x](double t) {
                return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
            };
            double t_max = 1.0;
            while (t_max < 100.0 && x * (std::cosh(t_max) - 1.0) - nu * t_max < 50.0)
                t_max *= 1.5;
            const double doubled =
                integrate(f, 0.0, std::min(2.0 * t_max, 200.0),
                          std::max(128, static_cast<int>(2.0 * t_max / 0.05) + 1));
            CHECK(std::abs(doubled - base) <= 1e-12 * base);
        }
}

TEST_CASE("envelope constants for the three regimes") {
    SUBCASE("small x, nonzero order") {
        const auto r = bessel_k_bounds_check(1.0);
        CHECK(r.pass);
        // K_1(x) x -> 1 from below as x -> 0
        CHECK(r.n_small == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(r.n_small < 2.0);
    }
    SUBCASE("small x, zero order against the log envelope") {
        const auto r = bessel_k_bounds_check(0.0);
        CHECK(r.pass);
        CHECK(std::isfinite(r.n_small));
    }
    SUBCASE("large x exponential envelope") {
        for (double nu : {0.0, 1.0, std::sqrt(2.0)}) {
            const auto r = bessel_k_bounds_check(nu);
            CHECK(r.pass);
            // K_nu(x) sqrt(x) e^{x} tends to sqrt(pi/2) ~ 1.2533 (from
            // below for nu = 0, from above otherwise)
            CHECK(r.n_large > 1.2);
            CHECK(r.n_large < 10.0);
        }
    }
}

TEST_CASE("domain and scaling guards") {
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), Error);
    CHECK_THROWS_AS(bessel_k(1.0, -2.0), Error);

    // the scaled variant survives arguments where K itself underflows
    const double scaled = bessel_k_scaled(1.0, 800.0);
    CHECK(std::isfinite(scaled));
    CHECK(scaled > 0.0);
    CHECK(bessel_k(1.0, 800.0) == 0.0); // graceful underflow
    for (double x : {5.0, 20.0, 50.0})
        CHECK(bessel_k_scaled(1.0, x) ==
              doctest::Approx(std::exp(x) * bessel_k(1.0, x)).epsilon(1e-12));
}
