#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degenlab/bumps.hpp"
#include "degenlab/errors.hpp"
#include "degenlab/sharpness.hpp"

#include <cmath>

using namespace degenlab;

TEST_CASE("cutoff family derivative bounds") {
    for (double delta : {0.25, 0.5}) {
        CutoffFamily cf{delta};
        double cmax = 0.0, cmin = 1e300;
        for (double n : {4.0, 16.0, 64.0, 256.0}) {
            const double c = cf.derivative_bound_constant(n, -std::log(2.0 * n) / delta - 2.0, 1.0);
            cmax = std::max(cmax, c);
            cmin = std::min(cmin, c);
        }
        CHECK(cmax < 12.0);              // recorded family constant
        CHECK(cmax / cmin < 1.001);      // one constant across all n (sampling jitter only)
    }

    SUBCASE("profile endpoints") {
        CutoffFamily cf{0.5};
        CHECK(cf.eta(1.0 / 8.1, 4.0) == 0.0);  // below 1/(2n)
        CHECK(cf.eta(0.26, 4.0) == 1.0);       // above 1/n
        CHECK(cf.tau(std::pow(1.0 / 8.1, 2.0), 4.0) == 0.0);
        CHECK(cf.tau(1.0, 4.0) == 1.0);
    }
}

TEST_CASE("endpoint truncation experiment") {
    const auto v = hardy_endpoint_experiment(2.0, 1.0, {0.25, 0.5}, {4.0, 16.0, 64.0, 256.0});
    CHECK(v.pass);
    CHECK(v.details.at("u_slope_scaling_error") <= 0.15);
    CHECK(v.details.at("f_level_scaling_error") <= 0.15);
    CHECK(v.details.at("ratio_strictly_increasing") == 1.0);
    CHECK(v.details.at("control_ratio_spread") <= 1.25);
    CHECK(v.details.at("d1_blowup_monotone") == 1.0);
    // slope of the truncation norm doubles when delta halves
    const double s0 = v.details.at("u_slope_delta_0");
    const double s1 = v.details.at("u_slope_delta_1");
    CHECK(s0 / s1 == doctest::Approx(2.0).epsilon(0.15));

    SUBCASE("input validation") {
        CHECK_THROWS_AS(hardy_endpoint_experiment(2.0, -1.0, {0.25, 0.5}, {4, 16, 64}), Error);
        CHECK_THROWS_AS(hardy_endpoint_experiment(2.0, 1.0, {0.25}, {4, 16, 64}), Error);
        CHECK_THROWS_AS(hardy_endpoint_experiment(2.0, 1.0, {0.25, 1.5}, {4, 16, 64}), Error);
        // truncation scale beyond the depth budget
        CHECK_THROWS_AS(hardy_endpoint_experiment(2.0, 1.0, {0.25, 0.5}, {4, 16, 1e30}), Error);
    }
}

TEST_CASE("parabolic divergence experiment") {
    SUBCASE("reference rate") {
        const auto v =
            parabolic_divergence_experiment(1.0, 1.0, 2.0, 3.0, {2, 4, 6, 8, 10, 12, 14, 16});
        CHECK(v.pass);
        CHECK(v.details.at("predicted_rate") == doctest::Approx(2.5));
        CHECK(v.details.at("rate_relative_error") <= 0.10);
        CHECK(v.details.at("control_bounded") == 1.0);
    }

    SUBCASE("interior theta is rejected as the divergent input") {
        CHECK_THROWS_AS(
            parabolic_divergence_experiment(1.0, 1.0, 2.0, 1.0, {2, 4, 6}), Error);
    }
}

TEST_CASE("kernel element above the admissible range") {
    const auto v = nonuniqueness_2d(1.0, 2.0, 3.0, 1.5);
    CHECK(v.pass);
    CHECK(v.details.at("interior_residual") < 1e-5);
    CHECK(v.details.at("h2_norm_drift") <= 0.01);
    CHECK(v.details.at("control_growth_factor") >= 2.0);

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(nonuniqueness_2d(1.0, 2.0, 1.5, 1.0), Error); // theta <= beta p
        CHECK_THROWS_AS(nonuniqueness_2d(1.0, 1.5, 3.0, 1.0), Error); // p < 2
        CHECK_THROWS_AS(nonuniqueness_2d(1.0, 2.0, 3.0, 2.5), Error); // control outside
    }
}

TEST_CASE("adjoint pairing identity") {
    SUBCASE("analytic pairs at several zeroth-order levels") {
        for (double c : {1.0, 4.0}) {
            const auto v = adjoint_identity_check(c, 10, 1u);
            CHECK(v.pass);
            CHECK(v.details.at("max_pairing_discrepancy") < 1e-6);
            CHECK(v.details.at("adjoint_root_error") <= 1e-12);
        }
    }

    SUBCASE("adjoint indicial roots at c = 4 are 3 and -1") {
        const auto v = adjoint_identity_check(4.0, 1, 2u);
        CHECK(v.details.at("adjoint_root_error") <= 1e-12);
    }

    SUBCASE("sampled pairs: zero input, support guard, discrete accuracy") {
        auto grid = make_log_grid_2d(-4.0, 4.0, 256, Axis::uniform(-4.0, 4.0, 256));
        Bump bs{0.2, 0.9, 1.0}, by{-0.3, 0.8, 1.0};
        auto u = GridFunction::sample2d(
            grid, [&](double s, double y) { return bs(s) * by(y); });
        auto w = GridFunction::sample2d(
            grid, [&](double s, double y) { return bs(s - 0.4) * by(y + 0.5); });

        GridFunction zero(grid);
        CHECK(adjoint_pairing_discrepancy(1.0, zero, w) == 0.0);

        // discrete operators + sampled quadrature: h^4-level agreement
        const double d = adjoint_pairing_discrepancy(1.0, u, w);
        CHECK(d < 5e-4);

        auto bad = GridFunction::sample2d(grid, [&](double, double) { return 1.0; });
        CHECK_THROWS_AS(adjoint_pairing_discrepancy(1.0, bad, w), Error);
    }
}
