#include "degenlab/harness.hpp"

#include "degenlab/bessel.hpp"
#include "degenlab/bumps.hpp"
#include "degenlab/derivatives.hpp"
#include "degenlab/dyadic.hpp"
#include "degenlab/elliptic.hpp"
#include "degenlab/errors.hpp"
#include "degenlab/muckenhoupt.hpp"
#include "degenlab/parabolic.hpp"
#include "degenlab/parallel.hpp"
#include "degenlab/rng.hpp"
#include "degenlab/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace degenlab {

namespace {

const std::vector<std::string> kUniversalKeys = {"seed", "timestamp"};

std::vector<std::string> with_universal(std::vector<std::string> keys) {
    keys.insert(keys.end(), kUniversalKeys.begin(), kUniversalKeys.end());
    return keys;
}

Curve solution_curve(const std::string& name, const GridFunction& u) {
    Curve c{name, {"s", "x", "u", "xDu", "x2D2u"}, {}};
    const auto v1 = diff1_4th(u.values, u.grid->h());
    const auto v2 = diff2_4th(u.values, u.grid->h());
    const auto& s = u.grid->s_nodes();
    const auto& x = u.grid->x_nodes();
    for (std::size_t i = 0; i < u.values.size(); ++i)
        c.rows.push_back({s[i], x[i], u.values[i], v1[i], v2[i] - v1[i]});
    return c;
}

GridFunction bump_forcing(const GridPtr& grid, double center, double width, double amplitude) {
    Bump b{center, width, amplitude};
    return GridFunction::sample(grid, [&](double s) { return b(s); });
}

ExperimentReport run_elliptic_solve(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"a", "b", "c", "lambda", "p", "theta", "s_min",
                                           "s_max", "n_cells", "f_center", "f_width",
                                           "f_amplitude"}));
    const auto op = EllipticOp1D::constant(cfg.get_double("a", 1.0), cfg.get_double("b", -1.0),
                                           cfg.get_double("c", 4.0));
    const double lambda = cfg.get_double("lambda", 0.0);
    const NormParams params(cfg.get_double("p", 2.0), cfg.get_double("theta", 0.0));
    auto grid = make_log_grid(cfg.get_double("s_min", -9.0), cfg.get_double("s_max", 9.0),
                              cfg.get_int("n_cells", 32768));
    const auto f = bump_forcing(grid, cfg.get_double("f_center", 0.35),
                                cfg.get_double("f_width", 0.3), cfg.get_double("f_amplitude", 1.0));

    EllipticOp1D folded = op;
    folded.lambda = lambda;
    const auto sol = solve_explicit(folded, f, params);
    const auto terms = weighted_sobolev_terms(sol.u, 2, params);

    ExperimentReport rep;
    rep.add_metric("alpha", sol.roots.alpha);
    rep.add_metric("beta", sol.roots.beta);
    rep.add_metric("admissible_theta_lo", sol.roots.alpha * params.p);
    rep.add_metric("admissible_theta_hi", sol.roots.beta * params.p);
    rep.add_metric("branch", static_cast<double>(static_cast<int>(sol.branch)));
    rep.add_metric("B1", sol.B1);
    rep.add_metric("B2", sol.B2);
    rep.add_metric("relative_residual", sol.relative_residual);
    rep.add_metric("norm_u", terms.value);
    rep.add_metric("norm_xDu", terms.grad);
    rep.add_metric("norm_x2D2u", terms.hess);

    SharpnessVerdict v;
    v.experiment = "elliptic-solve-residual";
    v.details["relative_residual"] = sol.relative_residual;
    v.pass = sol.relative_residual < 1e-8;
    rep.add_verdict(v);
    rep.curves.push_back(solution_curve("elliptic_solution", sol.u));
    return rep;
}

ExperimentReport run_elliptic_fd(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"a", "b", "c", "lambda", "p", "theta", "s_min",
                                           "s_max", "n_cells", "f_center", "f_width",
                                           "f_amplitude"}));
    const auto op = EllipticOp1D::constant(cfg.get_double("a", 1.0), cfg.get_double("b", -1.0),
                                           cfg.get_double("c", 4.0), cfg.get_double("lambda", 0.0));
    const NormParams params(cfg.get_double("p", 2.0), cfg.get_double("theta", 0.0));
    auto grid = make_log_grid(cfg.get_double("s_min", -5.0), cfg.get_double("s_max", 5.0),
                              cfg.get_int("n_cells", 4096));
    const auto f = bump_forcing(grid, cfg.get_double("f_center", 0.0),
                                cfg.get_double("f_width", 0.8), cfg.get_double("f_amplitude", 1.0));
    const auto u_fd = solve_fd(op, f, grid);
    const double res = residual(op, u_fd, f, params);

    EllipticOp1D folded = EllipticOp1D::constant(op.a.value(), op.b.value(),
                                                 op.c.value() + op.lambda);
    const auto sol = solve_explicit(folded, f, params);
    GridFunction diff(grid);
    for (std::size_t i = 0; i < diff.values.size(); ++i)
        diff.values[i] = u_fd.values[i] - sol.u.values[i];
    NormOptions unchecked;
    unchecked.check_truncation = false;
    const double gap = weighted_lp_norm(diff, params, unchecked);

    ExperimentReport rep;
    rep.add_metric("fd_residual", res);
    rep.add_metric("cross_solver_gap", gap);
    SharpnessVerdict v;
    v.experiment = "elliptic-fd-agreement";
    v.details["cross_solver_gap"] = gap;
    v.pass = gap <= 1e-6;
    rep.add_verdict(v);
    rep.curves.push_back(solution_curve("elliptic_fd_solution", u_fd));
    return rep;
}

ExperimentReport run_parabolic_cauchy(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"a0", "a", "b", "c", "lambda", "c0", "p", "theta",
                                           "q", "omega_gamma", "T", "n_time", "s_min", "s_max",
                                           "n_cells", "f_center", "f_width", "f_amplitude"}));
    const auto op = ParabolicOp1D::constant(
        cfg.get_double("a0", 1.0), cfg.get_double("a", 1.0), cfg.get_double("b", -1.0),
        cfg.get_double("c", 4.0), cfg.get_double("lambda", 0.0), cfg.get_double("c0", 1.0));
    const NormParams params(cfg.get_double("p", 2.0), cfg.get_double("theta", 0.0));
    const double q = cfg.get_double("q", params.p);
    const double T = cfg.get_double("T", 2.0);
    TimeWeight omega = TimeWeight::one();
    if (cfg.has("omega_gamma")) omega = TimeWeight::power(cfg.get_double("omega_gamma", 0.0));

    auto base = make_log_grid(cfg.get_double("s_min", -8.0), cfg.get_double("s_max", 8.0),
                              cfg.get_int("n_cells", 512));
    auto grid = with_time_axis(base, Axis::uniform(0.0, T, cfg.get_int("n_time", 256)));

    const Bump bs{cfg.get_double("f_center", 0.0), cfg.get_double("f_width", 0.8),
                  cfg.get_double("f_amplitude", 1.0)};
    const auto f = SpaceTimeFunction::sample(grid, [&](double t, double s) {
        return bs(s) * smooth_step(4.0 * t / T); // ramps on, compatible with u(0,.) = 0
    });
    const auto u = solve_parabolic_fd(op, f, grid);
    const auto ut = time_derivative(u);

    // spatial derivative fields slice by slice
    SpaceTimeFunction grad(grid), hess(grid);
    const int nt = u.nt(), nx = u.nx();
    std::vector<double> col(static_cast<std::size_t>(nx));
    for (int it = 0; it < nt; ++it) {
        for (int i = 0; i < nx; ++i) col[static_cast<std::size_t>(i)] = u.at(it, i);
        const auto d1 = diff1_4th(col, base->h());
        const auto d2 = diff2_4th(col, base->h());
        for (int i = 0; i < nx; ++i) {
            grad.at(it, i) = d1[static_cast<std::size_t>(i)];
            hess.at(it, i) = d2[static_cast<std::size_t>(i)] - d1[static_cast<std::size_t>(i)];
        }
    }

    const double nf = mixed_norm(f, q, params, omega);
    const double n_ut = mixed_norm(ut, q, params, omega);
    const double n_u = mixed_norm(u, q, params, omega);
    const double n_g = mixed_norm(grad, q, params, omega);
    const double n_h = mixed_norm(hess, q, params, omega);
    const double lam = op.lambda;
    const double lhs = n_ut + (1.0 + lam) * n_u + (1.0 + std::sqrt(lam)) * n_g + n_h;

    ExperimentReport rep;
    rep.add_metric("norm_f", nf);
    rep.add_metric("norm_ut", n_ut);
    rep.add_metric("norm_u", n_u);
    rep.add_metric("norm_xDu", n_g);
    rep.add_metric("norm_x2D2u", n_h);
    rep.add_metric("apriori_ratio", lhs / std::max(nf, 1e-300));
    rep.curves.push_back(solution_curve("parabolic_final_slice", u.slice(nt - 1)));
    return rep;
}

ExperimentReport run_heat_kernel(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"a", "c", "t", "x"}));
    const double a = cfg.get_double("a", 1.0);
    const double c = cfg.get_double("c", 1.0);
    const double t = cfg.get_double("t", 2.0);
    const double x = cfg.get_double("x", 2.0);
    const double value = heat_kernel_solution(a, c, t, x);

    double m_fit = 1e300;
    for (double tt : {1.0, 2.0, 4.0})
        for (double xx : {1.0, 2.0, 4.0}) {
            const double v = heat_kernel_solution(a, c, tt, xx);
            const double envelope =
                std::exp(-xx * xx / (4.0 * a * tt) - c * tt) / std::sqrt(tt);
            m_fit = std::min(m_fit, v / envelope);
        }

    ExperimentReport rep;
    rep.add_metric("value", value);
    rep.add_metric("lower_bound_constant", m_fit);
    SharpnessVerdict v;
    v.experiment = "heat-kernel-lower-bound";
    v.details["lower_bound_constant"] = m_fit;
    v.pass = m_fit > 0.0 && std::isfinite(m_fit);
    rep.add_verdict(v);
    return rep;
}

ExperimentReport run_bessel_check(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"nu_list", "x_min", "x_max", "samples"}));
    const auto nus = cfg.get_double_list("nu_list", {0.0, 0.5, 1.0, std::sqrt(2.0)});
    const double x_min = cfg.get_double("x_min", 1e-2);
    const double x_max = cfg.get_double("x_max", 20.0);
    const int samples = cfg.get_int("samples", 25);

    double worst_ode = 0.0, worst_rec = 0.0;
    for (double nu : nus)
        for (int i = 0; i <= samples; ++i) {
            const double x =
                x_min * std::exp(std::log(x_max / x_min) * static_cast<double>(i) / samples);
            worst_ode = std::max(worst_ode, bessel_ode_residual(nu, x));
            worst_rec = std::max(worst_rec, bessel_recurrence_residual(nu, x));
        }

    double worst_half = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double x =
            x_min * std::exp(std::log(x_max / x_min) * static_cast<double>(i) / samples);
        const double exact = std::sqrt(3.141592653589793 / (2.0 * x)) * std::exp(-x);
        worst_half = std::max(worst_half, std::abs(bessel_k(0.5, x) - exact) / exact);
    }

    Curve bounds{"bessel_bounds", {"nu", "n_small", "n_large"}, {}};
    bool bounds_pass = true;
    for (double nu : nus) {
        const auto r = bessel_k_bounds_check(nu, 1e-3, x_max);
        bounds_pass = bounds_pass && r.pass;
        bounds.rows.push_back({nu, r.n_small, r.n_large});
    }

    ExperimentReport rep;
    rep.add_metric("max_ode_residual", worst_ode);
    rep.add_metric("max_recurrence_residual", worst_rec);
    rep.add_metric("max_half_order_error", worst_half);
    SharpnessVerdict v;
    v.experiment = "bessel-suite";
    v.details["max_ode_residual"] = worst_ode;
    v.details["max_recurrence_residual"] = worst_rec;
    v.details["max_half_order_error"] = worst_half;
    v.details["bounds_pass"] = bounds_pass ? 1.0 : 0.0;
    v.pass = worst_ode <= 1e-9 && worst_rec <= 1e-9 && worst_half <= 1e-9 && bounds_pass;
    rep.add_verdict(v);
    rep.curves.push_back(std::move(bounds));
    return rep;
}

ExperimentReport run_norms(const RunConfig& cfg) {
    cfg.require_known_keys(
        with_universal({"p", "theta", "order", "s_min", "s_max", "n_cells", "preset"}));
    const NormParams params(cfg.get_double("p", 2.0), cfg.get_double("theta", 0.0));
    const int order = cfg.get_int("order", 2);
    auto grid = make_log_grid(cfg.get_double("s_min", -8.0), cfg.get_double("s_max", 8.0),
                              cfg.get_int("n_cells", 2048));
    const std::string preset = cfg.get_string("preset", "gaussian");
    GridFunction u;
    if (preset == "gaussian") {
        u = GridFunction::sample(grid, [](double s) { return std::exp(-s * s); });
    } else if (preset == "mixture") {
        SplitMix64 rng(static_cast<std::uint64_t>(cfg.get_int("seed", 1)));
        std::vector<Bump> bumps;
        const int parts = rng.uniform_int(1, 4);
        for (int k = 0; k < parts; ++k)
            bumps.push_back({rng.uniform(-3.0, 3.0), rng.uniform(0.5, 1.5),
                             rng.uniform(0.2, 2.0)});
        u = GridFunction::sample(grid, [&](double s) {
            double acc = 0.0;
            for (const auto& b : bumps) acc += b.amplitude * std::exp(-0.5 * std::pow((s - b.center) / b.width, 2));
            return acc;
        });
    } else {
        throw Error(ErrorCode::config_invalid, "unknown preset '" + preset + "'");
    }

    const auto terms = weighted_sobolev_terms(u, order, params);
    const auto zeta = DyadicCutoff::make(params.p);
    const double direct = weighted_sobolev_norm(u, order, params);
    const double dyad = dyadic_norm(u, order, params, zeta);

    ExperimentReport rep;
    rep.add_metric("norm_u", terms.value);
    if (order >= 1) rep.add_metric("norm_xDu", terms.grad);
    if (order >= 2) rep.add_metric("norm_x2D2u", terms.hess);
    rep.add_metric("sobolev_norm", direct);
    rep.add_metric("dyadic_norm", dyad);
    rep.add_metric("dyadic_direct_ratio", dyad / direct);
    if (preset == "gaussian") {
        const double p = params.p, th = params.theta;
        const double exact = std::pow(3.141592653589793 / p, 0.5 / p) *
                             std::exp(th * th / (4.0 * p * p));
        rep.add_metric("gaussian_closed_form_error",
                       std::abs(terms.value - exact) / exact);
    }
    Curve snap{"function_snapshot", {"s", "x", "value"}, {}};
    for (std::size_t i = 0; i < u.values.size(); ++i)
        snap.rows.push_back({grid->s_nodes()[i], grid->x_nodes()[i], u.values[i]});
    rep.curves.push_back(std::move(snap));
    return rep;
}

ExperimentReport run_sweep_theta(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"a", "b", "c", "p", "lambda", "theta_min",
                                           "theta_max", "theta_step", "corpus",
                                           "endpoint_probes"}));
    const double a = cfg.get_double("a", 1.0);
    const double b = cfg.get_double("b", -1.0);
    const double c = cfg.get_double("c", 4.0);
    const double p = cfg.get_double("p", 2.0);
    const double lambda = cfg.get_double("lambda", 0.0);
    const auto rows = sweep_theta(a, b, c, p, lambda, cfg.get_double("theta_min", -5.0),
                                  cfg.get_double("theta_max", 5.0),
                                  cfg.get_double("theta_step", 0.25),
                                  cfg.get_int("corpus", 20),
                                  static_cast<std::uint64_t>(cfg.get_int("seed", 1)));

    EllipticOp1D folded = EllipticOp1D::constant(a, b, c + lambda);
    const auto roots = indicial_roots(folded);
    const double ap = roots.alpha * p, bp = roots.beta * p;
    const double mid = 0.5 * (ap + bp);

    double n_mid = 0.0, n_lo = 0.0, n_hi = 0.0;
    const bool probes = cfg.get_int("endpoint_probes", 1) != 0;
    const auto base_op = EllipticOp1D::constant(a, b, c);
    const std::uint64_t seed = static_cast<std::uint64_t>(cfg.get_int("seed", 1));
    if (probes) {
        n_mid = ratio_constant_over_corpus(base_op, p, mid, lambda, cfg.get_int("corpus", 20),
                                           seed);
        n_lo = ratio_constant_over_corpus(base_op, p, ap + 0.01, lambda,
                                          cfg.get_int("corpus", 20), seed);
        n_hi = ratio_constant_over_corpus(base_op, p, bp - 0.01, lambda,
                                          cfg.get_int("corpus", 20), seed);
    }

    Curve curve{"theta_sweep", {"theta", "n_hat", "status", "divergence_flag"}, {}};
    bool inside_finite = true, outside_flagged = true;
    bool saw_endpoint = false, saw_outside = false;
    for (const auto& r : rows) {
        double status = 0.0;
        if (r.status == "endpoint-theta") {
            status = 1.0;
            saw_endpoint = true;
        } else if (r.status == "outside-range") {
            status = 2.0;
            saw_outside = true;
            if (!r.divergence_flag) outside_flagged = false;
        } else if (!std::isfinite(r.n_hat)) {
            inside_finite = false;
        }
        curve.rows.push_back({r.theta, std::isfinite(r.n_hat) ? r.n_hat : 0.0, status,
                              r.divergence_flag ? 1.0 : 0.0});
    }

    ExperimentReport rep;
    rep.add_metric("alpha_p", ap);
    rep.add_metric("beta_p", bp);
    if (probes) {
        rep.add_metric("n_hat_mid", n_mid);
        rep.add_metric("n_hat_near_lower_endpoint", n_lo);
        rep.add_metric("n_hat_near_upper_endpoint", n_hi);
        rep.add_metric("blowup_ratio_lower", n_lo / n_mid);
        rep.add_metric("blowup_ratio_upper", n_hi / n_mid);
    }
    SharpnessVerdict v;
    v.experiment = "sweep-dichotomy";
    v.details["inside_finite"] = inside_finite ? 1.0 : 0.0;
    v.details["outside_divergence_flagged"] = outside_flagged ? 1.0 : 0.0;
    v.details["saw_endpoint"] = saw_endpoint ? 1.0 : 0.0;
    v.details["saw_outside"] = saw_outside ? 1.0 : 0.0;
    if (probes) {
        v.details["blowup_ratio_lower"] = n_lo / n_mid;
        v.details["blowup_ratio_upper"] = n_hi / n_mid;
    }
    v.pass = inside_finite && outside_flagged &&
             (!probes || (n_lo / n_mid >= 10.0 && n_hi / n_mid >= 10.0));
    rep.add_verdict(v);
    rep.curves.push_back(std::move(curve));
    return rep;
}

ExperimentReport run_sharpness_hardy(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"p", "c", "delta_list", "n_list"}));
    const auto v = hardy_endpoint_experiment(
        cfg.get_double("p", 2.0), cfg.get_double("c", 1.0),
        cfg.get_double_list("delta_list", {0.25, 0.5}),
        cfg.get_double_list("n_list", {4.0, 16.0, 64.0, 256.0}));
    ExperimentReport rep;
    rep.add_verdict(v);
    return rep;
}

ExperimentReport run_sharpness_parabolic(const RunConfig& cfg) {
    cfg.require_known_keys(
        with_universal({"a", "c", "p", "theta", "T_list", "control_theta", "rate_tol"}));
    const auto v = parabolic_divergence_experiment(
        cfg.get_double("a", 1.0), cfg.get_double("c", 1.0), cfg.get_double("p", 2.0),
        cfg.get_double("theta", 3.0),
        cfg.get_double_list("T_list", {2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0}),
        cfg.get_double("control_theta", 0.0), cfg.get_double("rate_tol", 0.10));
    ExperimentReport rep;
    rep.add_verdict(v);
    return rep;
}

ExperimentReport run_sharpness_nonunique(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"c", "p", "theta", "theta_control"}));
    const auto v = nonuniqueness_2d(cfg.get_double("c", 1.0), cfg.get_double("p", 2.0),
                                    cfg.get_double("theta", 3.0),
                                    cfg.get_double("theta_control", 1.5));
    ExperimentReport rep;
    rep.add_verdict(v);
    return rep;
}

ExperimentReport run_sharpness_adjoint(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal({"c", "pairs"}));
    const auto v = adjoint_identity_check(cfg.get_double("c", 1.0), cfg.get_int("pairs", 10),
                                          static_cast<std::uint64_t>(cfg.get_int("seed", 1)));
    ExperimentReport rep;
    rep.add_verdict(v);
    return rep;
}

ExperimentReport run_sharpness_all(const RunConfig& cfg) {
    cfg.require_known_keys(with_universal(
        {"hardy_p", "hardy_c", "hardy_delta_list", "hardy_n_list", "parabolic_a", "parabolic_c",
         "parabolic_p", "parabolic_theta", "parabolic_T_list", "parabolic_control_theta",
         "parabolic_rate_tol", "nonunique_c", "nonunique_p", "nonunique_theta",
         "nonunique_theta_control", "adjoint_c", "adjoint_pairs"}));
    ExperimentReport rep;
    rep.add_verdict(hardy_endpoint_experiment(
        cfg.get_double("hardy_p", 2.0), cfg.get_double("hardy_c", 1.0),
        cfg.get_double_list("hardy_delta_list", {0.25, 0.5}),
        cfg.get_double_list("hardy_n_list", {4.0, 16.0, 64.0, 256.0})));
    rep.add_verdict(parabolic_divergence_experiment(
        cfg.get_double("parabolic_a", 1.0), cfg.get_double("parabolic_c", 1.0),
        cfg.get_double("parabolic_p", 2.0), cfg.get_double("parabolic_theta", 3.0),
        cfg.get_double_list("parabolic_T_list", {2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0}),
        cfg.get_double("parabolic_control_theta", 0.0),
        cfg.get_double("parabolic_rate_tol", 0.10)));
    rep.add_verdict(nonuniqueness_2d(cfg.get_double("nonunique_c", 1.0),
                                     cfg.get_double("nonunique_p", 2.0),
                                     cfg.get_double("nonunique_theta", 3.0),
                                     cfg.get_double("nonunique_theta_control", 1.5)));
    rep.add_verdict(adjoint_identity_check(cfg.get_double("adjoint_c", 1.0),
                                           cfg.get_int("adjoint_pairs", 10),
                                           static_cast<std::uint64_t>(cfg.get_int("seed", 1))));
    return rep;
}

using CommandFn = std::function<ExperimentReport(const RunConfig&)>;

const std::vector<std::pair<std::string, CommandFn>>& command_table() {
    static const std::vector<std::pair<std::string, CommandFn>> table = {
        {"elliptic-solve", run_elliptic_solve},
        {"elliptic-fd", run_elliptic_fd},
        {"parabolic-cauchy", run_parabolic_cauchy},
        {"heat-kernel", run_heat_kernel},
        {"bessel-check", run_bessel_check},
        {"norms", run_norms},
        {"sweep-theta", run_sweep_theta},
        {"sharpness-hardy", run_sharpness_hardy},
        {"sharpness-parabolic", run_sharpness_parabolic},
        {"sharpness-nonunique", run_sharpness_nonunique},
        {"sharpness-adjoint", run_sharpness_adjoint},
        {"sharpness-all", run_sharpness_all},
    };
    return table;
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : command_table()) out.push_back(name);
        return out;
    }();
    return names;
}

ExperimentReport run(const std::string& command, const RunConfig& config,
                     const std::string& out_dir) {
    const CommandFn* fn = nullptr;
    for (const auto& [name, f] : command_table())
        if (name == command) fn = &f;
    if (!fn)
        throw Error(ErrorCode::config_invalid, "unknown command '" + command + "'");
    ExperimentReport rep = (*fn)(config);
    rep.command = command;
    rep.config_echo = config.entries();
    if (!out_dir.empty()) write_report(rep, out_dir);
    return rep;
}

std::vector<SweepRow> sweep_theta(double a, double b, double c, double p, double lambda,
                                  double theta_min, double theta_max, double theta_step,
                                  int corpus_size, std::uint64_t seed) {
    if (!(theta_min < theta_max) || !(theta_step > 0.0))
        throw Error(ErrorCode::config_invalid, "bad sweep bounds");
    if (corpus_size < 1) throw Error(ErrorCode::config_invalid, "empty corpus");
    const auto op = EllipticOp1D::constant(a, b, c);
    EllipticOp1D folded = EllipticOp1D::constant(a, b, c + lambda);
    const auto roots = indicial_roots(folded);
    const double ap = roots.alpha * p, bp = roots.beta * p;

    std::vector<double> thetas;
    for (double th = theta_min; th <= theta_max + 1e-12; th += theta_step) thetas.push_back(th);

    std::vector<SweepRow> rows(thetas.size());
    parallel_for(thetas.size(), [&](std::size_t i) {
        const double th = thetas[i];
        SweepRow row;
        row.theta = th;
        row.n_hat = std::numeric_limits<double>::quiet_NaN();
        row.divergence_flag = false;
        if (std::abs(th - ap) < 1e-6 || std::abs(th - bp) < 1e-6) {
            row.status = "endpoint-theta";
        } else if (th > ap && th < bp) {
            row.status = "ok";
            row.n_hat = ratio_constant_over_corpus(op, p, th, lambda, corpus_size, seed);
        } else {
            row.status = "outside-range";
            const auto scan = homogeneous_norm_scan(folded, NormParams(p, th));
            row.divergence_flag = scan.outside_range_flag();
        }
        rows[i] = row;
    });
    return rows;
}

} // namespace degenlab
