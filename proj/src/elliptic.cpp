#include "degenlab/elliptic.hpp"

#include "degenlab/bumps.hpp"
#include "degenlab/derivatives.hpp"
#include "degenlab/errors.hpp"
#include "degenlab/quadrature.hpp"
#include "degenlab/rng.hpp"

#include <algorithm>
#include <cmath>

namespace degenlab {

namespace {

// coef * e^{-gamma s} without forming the overflowing factor
inline double scaled_mode(double coef, double gamma, double s) {
    if (coef == 0.0) return 0.0;
    return std::copysign(std::exp(std::log(std::abs(coef)) - gamma * s), coef);
}

// per-cell integrals of e^{gamma s} f(s); zero samples stay exactly zero so
// tails beyond the support vanish identically
std::vector<double> mode_cell_integrals(const GridFunction& f, double gamma) {
    const auto& s = f.grid->s_nodes();
    std::vector<double> g(f.values.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double fi = f.values[i];
        g[i] = (fi == 0.0) ? 0.0 : scaled_mode(fi, -gamma, s[i]);
    }
    const int cells = f.grid->n_cells();
    std::vector<double> out(static_cast<std::size_t>(cells));
    for (int i = 0; i < cells; ++i) out[static_cast<std::size_t>(i)] = cell_integral(g, i, f.grid->h());
    return out;
}

struct EffectiveConstants {
    double a, b, c; // lambda folded into c
};

EffectiveConstants effective_constants(const EllipticOp1D& op) {
    return {op.a.value(), op.b.value(), op.c.value() + op.lambda};
}

} // namespace

GridFunction apply_operator(const EllipticOp1D& op, const GridFunction& u) {
    if (u.is_2d()) throw Error(ErrorCode::invalid_range, "1D operator applied to 2D sample");
    const double h = u.grid->h();
    const auto v1 = diff1_4th(u.values, h);
    const auto v2 = diff2_4th(u.values, h);
    GridFunction out(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double x = u.grid->x_nodes()[i];
        const double a = op.a(x), b = op.b(x), c = op.c(x);
        out.values[i] = -a * v2[i] + (a + b) * v1[i] + (c + op.lambda) * u.values[i];
    }
    return out;
}

ExplicitSolution solve_explicit(const EllipticOp1D& op, const GridFunction& f,
                                const NormParams& params, std::optional<Branch> force_branch) {
    if (!op.is_constant())
        throw Error(ErrorCode::invalid_range, "explicit solve needs constant coefficients");
    f.check_finite("forcing");
    const auto [a, b, c] = effective_constants(op);
    const auto roots = indicial_roots(b / a, c / a);
    const double ap = roots.alpha * params.p;
    const double bp = roots.beta * params.p;
    const double theta = params.theta;
    if (std::abs(theta - ap) < 1e-9 || std::abs(theta - bp) < 1e-9)
        throw Error(ErrorCode::endpoint_theta,
                    "theta = " + std::to_string(theta) + " sits on an endpoint of (" +
                        std::to_string(ap) + ", " + std::to_string(bp) + ")");

    Branch branch;
    if (force_branch)
        branch = *force_branch;
    else if (theta < ap)
        branch = Branch::below_range;
    else if (theta > bp)
        branch = Branch::above_range;
    else
        branch = Branch::inside_range;

    const auto& grid = *f.grid;
    const int n = grid.node_count();
    const auto ca = mode_cell_integrals(f, roots.alpha);
    const auto cb = mode_cell_integrals(f, roots.beta);

    std::vector<double> La(static_cast<std::size_t>(n), 0.0), Lb(La), Ta(La), Tb(La);
    for (int i = 1; i < n; ++i) {
        La[static_cast<std::size_t>(i)] = La[static_cast<std::size_t>(i) - 1] + ca[static_cast<std::size_t>(i) - 1];
        Lb[static_cast<std::size_t>(i)] = Lb[static_cast<std::size_t>(i) - 1] + cb[static_cast<std::size_t>(i) - 1];
    }
    for (int i = n - 2; i >= 0; --i) {
        Ta[static_cast<std::size_t>(i)] = Ta[static_cast<std::size_t>(i) + 1] + ca[static_cast<std::size_t>(i)];
        Tb[static_cast<std::size_t>(i)] = Tb[static_cast<std::size_t>(i) + 1] + cb[static_cast<std::size_t>(i)];
    }

    const double k = 1.0 / (a * (roots.beta - roots.alpha));
    ExplicitSolution sol;
    sol.roots = roots;
    sol.branch = branch;
    GridFunction u(f.grid);
    const auto& s = grid.s_nodes();
    for (int i = 0; i < n; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        double coef_a = 0.0, coef_b = 0.0;
        switch (branch) {
            case Branch::below_range:
                coef_a = -k * La[ii];
                coef_b = k * Lb[ii];
                break;
            case Branch::inside_range:
                coef_a = k * Ta[ii];
                coef_b = k * Lb[ii];
                break;
            case Branch::above_range:
                coef_a = k * Ta[ii];
                coef_b = -k * Tb[ii];
                break;
        }
        u.values[ii] = scaled_mode(coef_a, roots.alpha, s[ii]) +
                       scaled_mode(coef_b, roots.beta, s[ii]);
    }
    switch (branch) {
        case Branch::below_range: sol.B1 = 0.0; sol.B2 = 0.0; break;
        case Branch::inside_range: sol.B1 = k * Ta[0]; sol.B2 = 0.0; break;
        case Branch::above_range: sol.B1 = k * Ta[0]; sol.B2 = -k * Tb[0]; break;
    }
    sol.u = std::move(u);
    EllipticOp1D folded = EllipticOp1D::constant(a, b, c);
    sol.relative_residual = residual(folded, sol.u, f, params);
    return sol;
}

GridFunction solve_fd(const EllipticOp1D& op, const GridFunction& f, const GridPtr& grid) {
    f.check_finite("forcing");
    const int n = grid->node_count();
    if (n < 4) throw Error(ErrorCode::invalid_range, "fd solve needs at least 4 nodes");
    const double h = grid->h();

    // declared ellipticity/bound metadata must hold on the grid
    const double tol = 1e-12;
    for (int i = 0; i < n; ++i) {
        const double x = grid->x(i);
        const double a = op.a(x);
        if (!(a >= op.nu - tol && a <= 1.0 / op.nu + tol))
            throw Error(ErrorCode::invalid_range,
                        "leading coefficient leaves [nu, 1/nu] at x = " + std::to_string(x));
        if (std::abs(op.b(x)) > op.K + tol || std::abs(op.c(x)) > op.K + tol)
            throw Error(ErrorCode::invalid_range,
                        "lower-order coefficient exceeds the declared K at x = " +
                            std::to_string(x));
    }

    std::vector<double> sub(static_cast<std::size_t>(n), 0.0),
        diag(static_cast<std::size_t>(n), 0.0), sup(static_cast<std::size_t>(n), 0.0),
        rhs(static_cast<std::size_t>(n), 0.0);

    for (int i = 1; i < n - 1; ++i) {
        const double x = grid->x(i);
        const double a = op.a(x), b = op.b(x), c = op.c(x);
        const std::size_t ii = static_cast<std::size_t>(i);
        sub[ii] = -a / (h * h) - (a + b) / (2.0 * h);
        diag[ii] = 2.0 * a / (h * h) + c + op.lambda;
        sup[ii] = -a / (h * h) + (a + b) / (2.0 * h);
        rhs[ii] = f.values[ii];
    }

    if (op.is_constant()) {
        // close with the indicial decay ratios of the folded operator
        const auto roots = indicial_roots(op);
        diag[0] = 1.0;
        sup[0] = -std::exp(roots.alpha * h);
        rhs[0] = 0.0;
        diag[static_cast<std::size_t>(n) - 1] = 1.0;
        sub[static_cast<std::size_t>(n) - 1] = -std::exp(-roots.beta * h);
        rhs[static_cast<std::size_t>(n) - 1] = 0.0;
    } else {
        diag[0] = 1.0;
        rhs[0] = 0.0;
        diag[static_cast<std::size_t>(n) - 1] = 1.0;
        rhs[static_cast<std::size_t>(n) - 1] = 0.0;
    }

    // Thomas elimination
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(diag[static_cast<std::size_t>(i)]));
    std::vector<double> cp(static_cast<std::size_t>(n), 0.0), dp(static_cast<std::size_t>(n), 0.0);
    double piv = diag[0];
    if (std::abs(piv) < 1e-14 * scale)
        throw Error(ErrorCode::singular_system, "zero pivot in row 0");
    cp[0] = sup[0] / piv;
    dp[0] = rhs[0] / piv;
    for (int i = 1; i < n; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        piv = diag[ii] - sub[ii] * cp[ii - 1];
        if (std::abs(piv) < 1e-14 * scale)
            throw Error(ErrorCode::singular_system, "pivot underflow in row " + std::to_string(i));
        cp[ii] = sup[ii] / piv;
        dp[ii] = (rhs[ii] - sub[ii] * dp[ii - 1]) / piv;
    }
    GridFunction u(grid);
    u.values[static_cast<std::size_t>(n) - 1] = dp[static_cast<std::size_t>(n) - 1];
    for (int i = n - 2; i >= 0; --i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        u.values[ii] = dp[ii] - cp[ii] * u.values[ii + 1];
    }
    return u;
}

double residual(const EllipticOp1D& op, const GridFunction& u, const GridFunction& f,
                const NormParams& params) {
    if (u.grid != f.grid && u.grid->node_count() != f.grid->node_count())
        throw Error(ErrorCode::invalid_range, "residual needs matching grids");
    const auto lu = apply_operator(op, u);
    GridFunction diff(u.grid);
    for (std::size_t i = 0; i < diff.values.size(); ++i)
        diff.values[i] = lu.values[i] - f.values[i];
    NormOptions unchecked;
    unchecked.check_truncation = false;
    const double num = weighted_lp_norm(diff, params, unchecked);
    const double den = weighted_lp_norm(f, params, unchecked);
    return num / std::max(den, 1e-30);
}

RatioReport apriori_ratio(const EllipticOp1D& op, const GridFunction& f, const NormParams& params,
                          double lambda) {
    NormOptions unchecked;
    unchecked.check_truncation = false;
    const double rhs = weighted_lp_norm(f, params, unchecked);
    if (rhs == 0.0)
        throw Error(ErrorCode::undefined_ratio, "zero forcing norm");

    EllipticOp1D folded = op;
    folded.lambda = lambda;
    const auto sol = solve_explicit(folded, f, params);
    const auto terms = weighted_sobolev_terms(sol.u, 2, params);

    RatioReport r;
    r.theta = params.theta;
    r.p = params.p;
    r.lambda = lambda;
    r.terms = terms;
    r.rhs = weighted_lp_norm(f, params); // checked: grid must carry the forcing
    r.lhs = (1.0 + lambda) * terms.value + (1.0 + std::sqrt(lambda)) * terms.grad + terms.hess;
    r.ratio = r.lhs / r.rhs;
    return r;
}

std::array<GridFunction, 2> homogeneous_basis(const EllipticOp1D& op, const GridPtr& grid) {
    const auto roots = indicial_roots(op);
    auto mode = [&](double gamma) {
        return GridFunction::sample(grid, [gamma](double s) { return std::exp(-gamma * s); });
    };
    return {mode(roots.alpha), mode(roots.beta)};
}

double pointwise_relative_residual(const EllipticOp1D& op, const GridFunction& v) {
    const auto& x = v.grid->x_nodes();
    const double h = v.grid->h();
    const auto v1 = diff1_4th(v.values, h);
    const auto v2 = diff2_4th(v.values, h);
    const int n = v.grid->node_count();
    double worst = 0.0;
    for (int i = 2; i < n - 2; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        const double a = op.a(x[ii]), b = op.b(x[ii]), c = op.c(x[ii]) + op.lambda;
        const double t1 = -a * v2[ii];
        const double t2 = (a + b) * v1[ii];
        const double t3 = c * v.values[ii];
        const double denom = std::abs(t1) + std::abs(t2) + std::abs(t3) + 1e-300;
        worst = std::max(worst, std::abs(t1 + t2 + t3) / denom);
    }
    return worst;
}

HomogeneousNormScan homogeneous_norm_scan(const EllipticOp1D& op, const NormParams& params) {
    const auto roots = indicial_roots(op);
    NormOptions unchecked;
    unchecked.check_truncation = false;

    auto diverges = [&](double gamma, bool toward_zero) {
        auto norm_on = [&](double lo, double hi) {
            const int cells = std::max(16, static_cast<int>((hi - lo) * 8));
            auto grid = make_log_grid(lo, hi, cells);
            auto u = GridFunction::sample(grid, [gamma](double s) { return std::exp(-gamma * s); });
            return weighted_lp_norm(u, params, unchecked);
        };
        double prev = toward_zero ? norm_on(-10.0, 1.0) : norm_on(-1.0, 10.0);
        for (int k = 1; k <= 2; ++k) {
            const double depth = 10.0 * std::pow(2.0, k);
            const double cur = toward_zero ? norm_on(-depth, 1.0) : norm_on(-1.0, depth);
            if (!(cur > 1.5 * prev)) return false;
            prev = cur;
        }
        return true;
    };

    HomogeneousNormScan scan{};
    scan.alpha_diverges_at_zero = diverges(roots.alpha, true);
    scan.alpha_diverges_at_infinity = diverges(roots.alpha, false);
    scan.beta_diverges_at_zero = diverges(roots.beta, true);
    scan.beta_diverges_at_infinity = diverges(roots.beta, false);
    return scan;
}

double ratio_constant_over_corpus(const EllipticOp1D& op, double p, double theta, double lambda,
                                  int corpus_size, std::uint64_t seed) {
    if (corpus_size < 1) throw Error(ErrorCode::config_invalid, "empty forcing corpus");
    EllipticOp1D folded = op;
    folded.lambda = lambda;
    const auto roots = indicial_roots(folded);
    const double ap = roots.alpha * p, bp = roots.beta * p;
    if (!(theta > ap && theta < bp))
        throw Error(ErrorCode::endpoint_theta,
                    "corpus ratio needs theta strictly inside the admissible range");

    const auto depth = [](double dist) {
        return std::clamp(9.0 / std::max(dist, 1e-6), 25.0, 380.0);
    };
    const double s_lo = -depth(theta - ap) - 3.0;
    const double s_hi = depth(bp - theta) + 3.0;
    const int cells = static_cast<int>((s_hi - s_lo) * 32.0);
    auto grid = make_log_grid(s_lo, s_hi, cells);

    SplitMix64 rng(seed);
    NormParams params(p, theta);
    double worst = 0.0;
    for (int k = 0; k < corpus_size; ++k) {
        Bump bump{rng.uniform(-1.5, 1.5), rng.uniform(0.3, 0.7), rng.uniform(0.5, 2.0)};
        auto f = GridFunction::sample(grid, [&](double s) { return bump(s); });
        const auto r = apriori_ratio(op, f, params, lambda);
        worst = std::max(worst, r.ratio);
    }
    return worst;
}

} // namespace degenlab
