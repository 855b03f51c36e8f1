#include "degenlab/norms.hpp"

#include "degenlab/derivatives.hpp"
#include "degenlab/errors.hpp"
#include "degenlab/quadrature.hpp"

#include <cmath>

namespace degenlab {

double TimeWeight::operator()(double t) const {
    if (kind == Kind::constant_one) return 1.0;
    return std::pow(std::abs(t), gamma);
}

NormParams::NormParams(double p_, double theta_) : p(p_), theta(theta_) {
    if (!(p > 1.0)) throw Error(ErrorCode::invalid_range, "norm exponent needs p > 1");
}

namespace {

// exp(p log|v| + theta s); 0 stays 0, so deep tails never produce 0 * inf.
inline double weighted_power(double v, double p, double theta, double s) {
    const double a = std::abs(v);
    if (a == 0.0) return 0.0;
    return std::exp(p * std::log(a) + theta * s);
}

CellKind kind_of(int i, int cells) {
    if (i == 0) return CellKind::left;
    if (i == cells - 1) return CellKind::right;
    return CellKind::interior;
}

int stencil_base(int i, int cells) {
    if (i == 0) return 0;
    if (i == cells - 1) return cells - 3;
    return i - 1;
}

struct Integral1D {
    double total = 0.0;
    double first_cell = 0.0;
    double last_cell = 0.0;
};

Integral1D integrate_samples_1d(const std::vector<double>& v, double s0, double h, double p,
                                double theta) {
    const int cells = static_cast<int>(v.size()) - 1;
    const auto& g = gauss4();
    Integral1D out;
    for (int i = 0; i < cells; ++i) {
        const auto& w = cell_interp_weights(kind_of(i, cells));
        const int base = stencil_base(i, cells);
        const double lo = s0 + i * h;
        double cell = 0.0;
        for (int q = 0; q < 4; ++q) {
            double val = 0.0;
            for (int k = 0; k < 4; ++k)
                val += w[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] *
                       v[static_cast<std::size_t>(base + k)];
            const double s = lo + g.xi[static_cast<std::size_t>(q)] * h;
            cell += g.w[static_cast<std::size_t>(q)] * weighted_power(val, p, theta, s);
        }
        cell *= h;
        out.total += cell;
        if (i == 0) out.first_cell = cell;
        if (i == cells - 1) out.last_cell = cell;
    }
    return out;
}

struct Integral2D {
    double total = 0.0;
    double s_first = 0.0, s_last = 0.0; // outermost log-cell strips
    double y_first = 0.0, y_last = 0.0; // outermost transverse strips
};

Integral2D integrate_samples_2d(const GridFunction& u, double p, double theta) {
    const auto& grid = *u.grid;
    const auto& axis = *grid.transverse();
    const int sc = grid.n_cells();
    const int yc = axis.n_cells;
    const int ny = axis.node_count();
    const double hs = grid.h(), hy = axis.h();
    const auto& g = gauss4();
    Integral2D out;
    std::vector<double> row(static_cast<std::size_t>(ny));
    for (int i = 0; i < sc; ++i) {
        const auto& ws = cell_interp_weights(kind_of(i, sc));
        const int sbase = stencil_base(i, sc);
        const double slo = grid.s_min() + i * hs;
        for (int qs = 0; qs < 4; ++qs) {
            // transverse profile at this s Gauss point
            for (int j = 0; j < ny; ++j) {
                double val = 0.0;
                for (int k = 0; k < 4; ++k)
                    val += ws[static_cast<std::size_t>(qs)][static_cast<std::size_t>(k)] *
                           u.values[static_cast<std::size_t>(sbase + k) * ny + j];
                row[static_cast<std::size_t>(j)] = val;
            }
            const double s = slo + g.xi[static_cast<std::size_t>(qs)] * hs;
            const double wq = g.w[static_cast<std::size_t>(qs)] * hs;
            for (int j = 0; j < yc; ++j) {
                const auto& wy = cell_interp_weights(kind_of(j, yc));
                const int ybase = stencil_base(j, yc);
                double cell = 0.0;
                for (int qy = 0; qy < 4; ++qy) {
                    double val = 0.0;
                    for (int k = 0; k < 4; ++k)
                        val += wy[static_cast<std::size_t>(qy)][static_cast<std::size_t>(k)] *
                               row[static_cast<std::size_t>(ybase + k)];
                    cell += g.w[static_cast<std::size_t>(qy)] * weighted_power(val, p, theta, s);
                }
                cell *= wq * hy;
                out.total += cell;
                if (i == 0) out.s_first += cell;
                if (i == sc - 1) out.s_last += cell;
                if (j == 0) out.y_first += cell;
                if (j == yc - 1) out.y_last += cell;
            }
        }
    }
    return out;
}

void check_truncation_1d(const Integral1D& r, const NormOptions& opts) {
    if (!opts.check_truncation || r.total == 0.0) return;
    const double boundary = r.first_cell + r.last_cell;
    const double interior = r.total - boundary;
    if (boundary > opts.truncation_tol * std::max(interior, 0.0))
        throw Error(ErrorCode::truncation_dominated,
                    "boundary cells contribute " + std::to_string(boundary) + " of " +
                        std::to_string(r.total) + "; grid too small");
}

void check_truncation_2d(const Integral2D& r, const NormOptions& opts) {
    if (!opts.check_truncation || r.total == 0.0) return;
    const double boundary = r.s_first + r.s_last + r.y_first + r.y_last;
    const double interior = r.total - boundary;
    if (boundary > opts.truncation_tol * std::max(interior, 0.0))
        throw Error(ErrorCode::truncation_dominated,
                    "boundary strips contribute " + std::to_string(boundary) + " of " +
                        std::to_string(r.total) + "; grid too small");
}

double lp_of_samples(const GridFunction& u, const NormParams& params, const NormOptions& opts) {
    if (u.is_2d()) {
        const auto r = integrate_samples_2d(u, params.p, params.theta);
        check_truncation_2d(r, opts);
        return std::pow(r.total, 1.0 / params.p);
    }
    const auto r = integrate_samples_1d(u.values, u.grid->s_min(), u.grid->h(), params.p,
                                        params.theta);
    check_truncation_1d(r, opts);
    return std::pow(r.total, 1.0 / params.p);
}

// s-direction derivative of a 2D array, column by column
std::vector<double> diff_s_2d(const GridFunction& u, bool second) {
    const int nx = u.nx(), ny = u.ny();
    std::vector<double> out(u.values.size());
    std::vector<double> col(static_cast<std::size_t>(nx));
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) col[static_cast<std::size_t>(i)] = u.at(i, j);
        const auto d = second ? diff2_4th(col, u.grid->h()) : diff1_4th(col, u.grid->h());
        for (int i = 0; i < nx; ++i) out[static_cast<std::size_t>(i) * ny + j] =
            d[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<double> diff_y_2d(const GridPtr& grid, const std::vector<double>& v, bool second) {
    const int nx = grid->node_count();
    const int ny = grid->transverse()->node_count();
    const double hy = grid->transverse()->h();
    std::vector<double> out(v.size());
    std::vector<double> row(static_cast<std::size_t>(ny));
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j)
            row[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i) * ny + j];
        const auto d = second ? diff2_4th(row, hy) : diff1_4th(row, hy);
        for (int j = 0; j < ny; ++j)
            out[static_cast<std::size_t>(i) * ny + j] = d[static_cast<std::size_t>(j)];
    }
    return out;
}

} // namespace

double weighted_lp_norm(const GridFunction& u, const NormParams& params, const NormOptions& opts) {
    u.check_finite("norm input");
    return lp_of_samples(u, params, opts);
}

SobolevTerms weighted_sobolev_terms(const GridFunction& u, int order, const NormParams& params,
                                    const NormOptions& opts) {
    if (order < 0 || order > 2)
        throw Error(ErrorCode::invalid_range, "sobolev order must be 0, 1 or 2");
    u.check_finite("norm input");
    SobolevTerms t{0.0, 0.0, 0.0};
    t.value = lp_of_samples(u, params, opts);
    if (order == 0) return t;

    if (!u.is_2d()) {
        const double h = u.grid->h();
        const auto v1 = diff1_4th(u.values, h);
        t.grad = lp_of_samples(GridFunction(u.grid, v1), params, opts);
        if (order == 2) {
            const auto v2 = diff2_4th(u.values, h);
            std::vector<double> hess(v1.size());
            for (std::size_t i = 0; i < v1.size(); ++i) hess[i] = v2[i] - v1[i];
            t.hess = lp_of_samples(GridFunction(u.grid, hess), params, opts);
        }
        return t;
    }

    const auto& s = u.grid->s_nodes();
    const int ny = u.ny();
    const auto vs = diff_s_2d(u, false);
    const auto vy = diff_y_2d(u.grid, u.values, false);
    std::vector<double> grad(u.values.size());
    for (int i = 0; i < u.nx(); ++i) {
        const double xs = std::exp(s[static_cast<std::size_t>(i)]);
        for (int j = 0; j < ny; ++j) {
            const std::size_t k = static_cast<std::size_t>(i) * ny + j;
            grad[k] = std::hypot(vs[k], xs * vy[k]);
        }
    }
    t.grad = lp_of_samples(GridFunction(u.grid, grad), params, opts);
    if (order == 2) {
        const auto vss = diff_s_2d(u, true);
        const auto vsy = diff_y_2d(u.grid, vs, false);
        const auto vyy = diff_y_2d(u.grid, u.values, true);
        std::vector<double> hess(u.values.size());
        for (int i = 0; i < u.nx(); ++i) {
            const double xs = std::exp(s[static_cast<std::size_t>(i)]);
            for (int j = 0; j < ny; ++j) {
                const std::size_t k = static_cast<std::size_t>(i) * ny + j;
                const double dd = vss[k] - vs[k];          // x^2 D_dd
                const double dm = xs * vsy[k];             // x^2 D_{d y}
                const double dy2 = xs * xs * vyy[k];       // x^2 D_yy
                hess[k] = std::sqrt(dd * dd + 2.0 * dm * dm + dy2 * dy2);
            }
        }
        t.hess = lp_of_samples(GridFunction(u.grid, hess), params, opts);
    }
    return t;
}

double weighted_sobolev_norm(const GridFunction& u, int order, const NormParams& params,
                             const NormOptions& opts) {
    const auto t = weighted_sobolev_terms(u, order, params, opts);
    double acc = std::pow(t.value, params.p);
    if (order >= 1) acc += std::pow(t.grad, params.p);
    if (order >= 2) acc += std::pow(t.hess, params.p);
    return std::pow(acc, 1.0 / params.p);
}

double weighted_integral(const GridPtr& grid, double theta,
                         const std::function<double(double, double)>& f) {
    const auto& g = gauss4();
    const int sc = grid->n_cells();
    const double hs = grid->h();
    double total = 0.0;
    if (!grid->transverse()) {
        for (int i = 0; i < sc; ++i) {
            const double lo = grid->s_min() + i * hs;
            double cell = 0.0;
            for (int q = 0; q < 4; ++q) {
                const double s = lo + g.xi[static_cast<std::size_t>(q)] * hs;
                cell += g.w[static_cast<std::size_t>(q)] * f(s, 0.0) * std::exp(theta * s);
            }
            total += cell * hs;
        }
        return total;
    }
    const auto& axis = *grid->transverse();
    const double hy = axis.h();
    for (int i = 0; i < sc; ++i) {
        const double lo = grid->s_min() + i * hs;
        for (int qs = 0; qs < 4; ++qs) {
            const double s = lo + g.xi[static_cast<std::size_t>(qs)] * hs;
            const double ws = g.w[static_cast<std::size_t>(qs)] * hs * std::exp(theta * s);
            for (int j = 0; j < axis.n_cells; ++j) {
                const double ylo = axis.lo + j * hy;
                double cell = 0.0;
                for (int qy = 0; qy < 4; ++qy) {
                    const double y = ylo + g.xi[static_cast<std::size_t>(qy)] * hy;
                    cell += g.w[static_cast<std::size_t>(qy)] * f(s, y);
                }
                total += cell * ws * hy;
            }
        }
    }
    return total;
}

double weighted_power_integral_samples(const std::vector<double>& v, double s0, double h,
                                       double p, double theta) {
    return integrate_samples_1d(v, s0, h, p, theta).total;
}

double weighted_power_integral(const GridPtr& grid, double p, double theta,
                               const std::function<double(double, double)>& f) {
    const auto& g = gauss4();
    const int sc = grid->n_cells();
    const double hs = grid->h();
    double total = 0.0;
    if (!grid->transverse()) {
        for (int i = 0; i < sc; ++i) {
            const double lo = grid->s_min() + i * hs;
            double cell = 0.0;
            for (int q = 0; q < 4; ++q) {
                const double s = lo + g.xi[static_cast<std::size_t>(q)] * hs;
                cell += g.w[static_cast<std::size_t>(q)] * weighted_power(f(s, 0.0), p, theta, s);
            }
            total += cell * hs;
        }
        return total;
    }
    const auto& axis = *grid->transverse();
    const double hy = axis.h();
    for (int i = 0; i < sc; ++i) {
        const double lo = grid->s_min() + i * hs;
        for (int qs = 0; qs < 4; ++qs) {
            const double s = lo + g.xi[static_cast<std::size_t>(qs)] * hs;
            const double wq = g.w[static_cast<std::size_t>(qs)] * hs;
            for (int j = 0; j < axis.n_cells; ++j) {
                const double ylo = axis.lo + j * hy;
                double cell = 0.0;
                for (int qy = 0; qy < 4; ++qy) {
                    const double y = ylo + g.xi[static_cast<std::size_t>(qy)] * hy;
                    cell += g.w[static_cast<std::size_t>(qy)] *
                            weighted_power(f(s, y), p, theta, s);
                }
                total += cell * wq * hy;
            }
        }
    }
    return total;
}

} // namespace degenlab
