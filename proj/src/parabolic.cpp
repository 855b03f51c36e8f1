#include "degenlab/parabolic.hpp"

#include "degenlab/errors.hpp"
#include "degenlab/parallel.hpp"
#include "degenlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace degenlab {

ParabolicOp1D ParabolicOp1D::constant(double a0, double a, double b, double c, double lambda,
                                      double c0) {
    if (!(a0 > 0.0 && a > 0.0 && c0 > 0.0))
        throw Error(ErrorCode::invalid_range, "parabolic operator needs a0, a, c0 > 0");
    ParabolicOp1D op;
    op.a0 = a0;
    op.a = a;
    op.b = b;
    op.c = c;
    op.lambda = lambda;
    op.c0 = c0;
    return op;
}

namespace {

// (erf(hi) - erf(lo))/2 without cancellation for same-sign arguments
double erf_diff_half(double lo, double hi) {
    if (lo >= 0.0 && hi >= 0.0) return 0.5 * (std::erfc(lo) - std::erfc(hi));
    if (lo <= 0.0 && hi <= 0.0) return 0.5 * (std::erfc(-hi) - std::erfc(-lo));
    return 0.5 * (std::erf(hi) - std::erf(lo));
}

} // namespace

double heat_kernel_solution(double a, double c, double t, double x) {
    if (!(a > 0.0)) throw Error(ErrorCode::invalid_range, "heat kernel needs a > 0");
    if (t <= -1.0) return 0.0;
    // v = int e^{-c tau} (erf(x/(2 sqrt(a tau))) - erf((x-1)/(2 sqrt(a tau))))/2 dtau
    // over tau in (max(t,0), t+1); tau = sigma^2 removes the endpoint cusp.
    const double sigma0 = std::sqrt(std::max(t, 0.0));
    const double sigma1 = std::sqrt(t + 1.0);
    const auto f = [a, c, x](double sigma) {
        const double tau = sigma * sigma;
        if (tau == 0.0) return 0.0;
        const double den = 2.0 * std::sqrt(a) * sigma;
        const double d = erf_diff_half((x - 1.0) / den, x / den);
        return 2.0 * sigma * std::exp(-c * tau) * d;
    };
    return integrate(f, sigma0, sigma1, 96);
}

SpaceTimeFunction solve_parabolic_fd(const ParabolicOp1D& op, const SpaceTimeFunction& f,
                                     const GridPtr& grid) {
    if (!grid->time()) throw Error(ErrorCode::invalid_range, "parabolic solve needs a time axis");
    if (grid->transverse()) throw Error(ErrorCode::invalid_range, "parabolic solve is 1D in space");
    const int n = grid->node_count();
    const int nt = grid->time()->node_count();
    if (f.nx() != n || f.nt() != nt)
        throw Error(ErrorCode::invalid_range, "forcing does not match grid");
    const double h = grid->h();
    const double dt = grid->time()->h();
    const int m = n - 2; // interior unknowns, zero Dirichlet at both ends
    if (m < 2) throw Error(ErrorCode::invalid_range, "too few interior nodes");

    const double adv = op.a + op.b;
    const double react = op.c + op.lambda * op.c0;
    const double sub = -op.a / (h * h) - adv / (2.0 * h);
    const double dia = 2.0 * op.a / (h * h) + react;
    const double sup = -op.a / (h * h) + adv / (2.0 * h);

    // (a0/dt + A/2) v^{m+1} = (a0/dt - A/2) v^m + (g^m + g^{m+1})/2
    const double dl = 0.5 * sub;
    const double dd = op.a0 / dt + 0.5 * dia;
    const double du = 0.5 * sup;

    std::vector<double> cp(static_cast<std::size_t>(m));
    std::vector<double> piv(static_cast<std::size_t>(m));
    double scale = std::abs(dd);
    {
        double pv = dd;
        if (std::abs(pv) < 1e-14 * scale)
            throw Error(ErrorCode::singular_step, "zero pivot in step matrix");
        piv[0] = pv;
        cp[0] = du / pv;
        for (int i = 1; i < m; ++i) {
            pv = dd - dl * cp[static_cast<std::size_t>(i) - 1];
            if (std::abs(pv) < 1e-14 * scale)
                throw Error(ErrorCode::singular_step,
                            "pivot underflow in step matrix row " + std::to_string(i));
            piv[static_cast<std::size_t>(i)] = pv;
            cp[static_cast<std::size_t>(i)] = du / pv;
        }
    }

    SpaceTimeFunction u(grid);
    std::vector<double> rhs(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(m));
    for (int step = 0; step + 1 < nt; ++step) {
        for (int i = 0; i < m; ++i) {
            const int ix = i + 1;
            const double vm = u.at(step, ix - 1), v0 = u.at(step, ix), vp = u.at(step, ix + 1);
            const double av = sub * vm + dia * v0 + sup * vp;
            rhs[static_cast<std::size_t>(i)] = op.a0 / dt * v0 - 0.5 * av +
                                               0.5 * (f.at(step, ix) + f.at(step + 1, ix));
        }
        // forward sweep
        w[0] = rhs[0] / piv[0];
        for (int i = 1; i < m; ++i)
            w[static_cast<std::size_t>(i)] =
                (rhs[static_cast<std::size_t>(i)] - dl * w[static_cast<std::size_t>(i) - 1]) /
                piv[static_cast<std::size_t>(i)];
        for (int i = m - 2; i >= 0; --i)
            w[static_cast<std::size_t>(i)] -=
                cp[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i) + 1];
        for (int i = 0; i < m; ++i) u.at(step + 1, i + 1) = w[static_cast<std::size_t>(i)];
        u.at(step + 1, 0) = 0.0;
        u.at(step + 1, n - 1) = 0.0;
    }
    return u;
}

SpaceTimeFunction time_derivative(const SpaceTimeFunction& u) {
    const int nt = u.nt(), nx = u.nx();
    if (nt < 3) throw Error(ErrorCode::invalid_range, "time derivative needs >= 3 time nodes");
    const double dt = u.grid->time()->h();
    SpaceTimeFunction d(u.grid);
    for (int ix = 0; ix < nx; ++ix) {
        d.at(0, ix) = (-3.0 * u.at(0, ix) + 4.0 * u.at(1, ix) - u.at(2, ix)) / (2.0 * dt);
        for (int it = 1; it < nt - 1; ++it)
            d.at(it, ix) = (u.at(it + 1, ix) - u.at(it - 1, ix)) / (2.0 * dt);
        d.at(nt - 1, ix) =
            (3.0 * u.at(nt - 1, ix) - 4.0 * u.at(nt - 2, ix) + u.at(nt - 3, ix)) / (2.0 * dt);
    }
    return d;
}

namespace {

// composite Simpson with a 3/8 closure when the interval count is odd
double composite_simpson(const std::vector<double>& v, double h) {
    const int cells = static_cast<int>(v.size()) - 1;
    if (cells <= 0) return 0.0;
    if (cells == 1) return 0.5 * h * (v[0] + v[1]);
    double total = 0.0;
    int even_cells = cells;
    if (cells % 2 != 0) even_cells = cells - 3;
    for (int i = 0; i + 2 <= even_cells; i += 2)
        total += h / 3.0 *
                 (v[static_cast<std::size_t>(i)] + 4.0 * v[static_cast<std::size_t>(i) + 1] +
                  v[static_cast<std::size_t>(i) + 2]);
    if (cells % 2 != 0) {
        const std::size_t b = static_cast<std::size_t>(cells) - 3;
        if (cells >= 3)
            total += 3.0 * h / 8.0 * (v[b] + 3.0 * v[b + 1] + 3.0 * v[b + 2] + v[b + 3]);
        else
            total += 0.5 * h * (v[0] + v[1]); // cells == 1 handled above; defensive
    }
    return total;
}

} // namespace

double mixed_norm(const SpaceTimeFunction& u, double q, const NormParams& params,
                  const TimeWeight& omega) {
    if (!(q > 1.0)) throw Error(ErrorCode::invalid_range, "mixed norm needs q > 1");
    const int nt = u.nt();
    const auto& tn = u.grid->time()->nodes;
    const double dt = u.grid->time()->h();

    std::vector<double> slice_q(static_cast<std::size_t>(nt));
    for (int it = 0; it < nt; ++it) {
        const double s = weighted_lp_norm(u.slice(it), params);
        slice_q[static_cast<std::size_t>(it)] = std::pow(s, q);
    }

    const bool negative_power =
        omega.kind == TimeWeight::Kind::power && omega.gamma < 0.0;
    double total = 0.0;
    int start = 0;
    if (negative_power && tn.front() == 0.0) {
        // int_0^dt t^gamma phi(t) dt with t = sigma^{1/(gamma+1)}
        const double g = omega.gamma;
        if (g <= -1.0)
            throw Error(ErrorCode::divergent_constant, "time weight exponent not integrable");
        const double upper = std::pow(dt, g + 1.0);
        const auto phi = [&](double sigma) {
            const double t = std::pow(sigma, 1.0 / (g + 1.0));
            return interp_uniform(slice_q, tn.front(), dt, t);
        };
        total += integrate(phi, 0.0, upper, 24) / (g + 1.0);
        start = 1;
    }
    std::vector<double> weighted(slice_q.begin() + start, slice_q.end());
    for (std::size_t i = 0; i < weighted.size(); ++i)
        weighted[i] *= omega(tn[static_cast<std::size_t>(start) + i]);
    total += composite_simpson(weighted, dt);
    return std::pow(total, 1.0 / q);
}

GrowthCurve norm_growth_curve(double a, double c, double p, double theta,
                              const std::vector<double>& T_list) {
    if (T_list.empty()) throw Error(ErrorCode::invalid_range, "empty T list");
    for (std::size_t i = 0; i + 1 < T_list.size(); ++i)
        if (!(T_list[i] < T_list[i + 1]))
            throw Error(ErrorCode::invalid_range, "T list must be increasing");
    const double T_end = T_list.back();
    if (!(T_list.front() > -1.0))
        throw Error(ErrorCode::invalid_range, "T list must start after the source turns on");

    // spatial window around the drifting weighted peak x = 2 a t theta / p
    const double mu_end = 2.0 * a * T_end * theta / p;
    const double spread = 6.0 * std::sqrt(2.0 * a * std::max(T_end, 1.0) / p) + 8.0;
    const double x_lo = std::min(0.0, mu_end) - spread;
    const double x_hi = std::max(1.0, mu_end) + spread;
    const double hx = 0.125;
    const int nx = static_cast<int>(std::ceil((x_hi - x_lo) / hx)) + 1;

    const double ht = 0.125;
    const int nt = static_cast<int>(std::ceil((T_end + 1.0) / ht)) + 1;

    // W(t) = int |v(t,x)|^p e^{theta x} dx
    std::vector<double> W(static_cast<std::size_t>(nt), 0.0);
    parallel_for(static_cast<std::size_t>(nt), [&](std::size_t it) {
        const double t = -1.0 + static_cast<double>(it) * ht;
        std::vector<double> row(static_cast<std::size_t>(nx));
        for (int j = 0; j < nx; ++j)
            row[static_cast<std::size_t>(j)] = heat_kernel_solution(a, c, t, x_lo + j * hx);
        // log-safe weighted power integral of the sampled row
        const auto& g4 = gauss4();
        double acc = 0.0;
        const int cells = nx - 1;
        for (int i = 0; i < cells; ++i) {
            const auto kind = i == 0 ? CellKind::left
                                     : (i == cells - 1 ? CellKind::right : CellKind::interior);
            const auto& wts = cell_interp_weights(kind);
            const int base = i == 0 ? 0 : (i == cells - 1 ? cells - 3 : i - 1);
            const double lo = x_lo + i * hx;
            double cell = 0.0;
            for (int qq = 0; qq < 4; ++qq) {
                double val = 0.0;
                for (int k = 0; k < 4; ++k)
                    val += wts[static_cast<std::size_t>(qq)][static_cast<std::size_t>(k)] *
                           row[static_cast<std::size_t>(base + k)];
                const double xg = lo + g4.xi[static_cast<std::size_t>(qq)] * hx;
                const double av = std::abs(val);
                if (av > 0.0)
                    cell += g4.w[static_cast<std::size_t>(qq)] *
                            std::exp(p * std::log(av) + theta * xg);
            }
            acc += cell * hx;
        }
        W[it] = acc;
    });

    const auto cum = cumulative_integral(W, ht);
    GrowthCurve out;
    out.predicted_rate = a / p * theta * theta - c * p;
    for (double T : T_list) {
        const int idx = std::min(nt - 1, static_cast<int>(std::llround((T + 1.0) / ht)));
        GrowthPoint pt;
        pt.T = -1.0 + idx * ht;
        pt.norm_p = cum[static_cast<std::size_t>(idx)];
        out.points.push_back(pt);
    }

    // increments between consecutive recorded T's
    std::vector<double> mid, loginc;
    for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
        const double inc = out.points[i + 1].norm_p - out.points[i].norm_p;
        if (inc > 0.0) {
            mid.push_back(0.5 * (out.points[i].T + out.points[i + 1].T));
            loginc.push_back(std::log(inc));
        }
    }
    const double last_inc = out.points.size() >= 2
                                ? out.points.back().norm_p -
                                      out.points[out.points.size() - 2].norm_p
                                : 0.0;
    out.bounded = last_inc <= 1e-6 * out.points.back().norm_p;

    out.fitted_rate = 0.0;
    const std::size_t half = mid.size() / 2;
    if (mid.size() - half >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const std::size_t m = mid.size() - half;
        for (std::size_t i = half; i < mid.size(); ++i) {
            sx += mid[i];
            sy += loginc[i];
            sxx += mid[i] * mid[i];
            sxy += mid[i] * loginc[i];
        }
        const double denom = m * sxx - sx * sx;
        if (std::abs(denom) > 0.0) out.fitted_rate = (m * sxy - sx * sy) / denom;
    }
    return out;
}

} // namespace degenlab
