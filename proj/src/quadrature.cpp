#include "degenlab/quadrature.hpp"

#include "degenlab/errors.hpp"

#include <cmath>

namespace degenlab {

const Gauss4& gauss4() {
    // nodes/weights on [-1,1] mapped to [0,1]
    static const Gauss4 g = [] {
        const double n1 = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
        const double n2 = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
        const double w1 = (18.0 + std::sqrt(30.0)) / 36.0;
        const double w2 = (18.0 - std::sqrt(30.0)) / 36.0;
        Gauss4 r;
        r.xi = {0.5 * (1.0 - n2), 0.5 * (1.0 - n1), 0.5 * (1.0 + n1), 0.5 * (1.0 + n2)};
        r.w = {0.5 * w2, 0.5 * w1, 0.5 * w1, 0.5 * w2};
        return r;
    }();
    return g;
}

namespace {

// Lagrange cubic basis through nodes at local coordinates t0..t3, evaluated
// at t.
std::array<double, 4> lagrange4(double t, const std::array<double, 4>& tn) {
    std::array<double, 4> w{};
    for (int k = 0; k < 4; ++k) {
        double num = 1.0, den = 1.0;
        for (int j = 0; j < 4; ++j) {
            if (j == k) continue;
            num *= (t - tn[static_cast<std::size_t>(j)]);
            den *= (tn[static_cast<std::size_t>(k)] - tn[static_cast<std::size_t>(j)]);
        }
        w[static_cast<std::size_t>(k)] = num / den;
    }
    return w;
}

std::array<std::array<double, 4>, 4> build_weights(const std::array<double, 4>& stencil) {
    std::array<std::array<double, 4>, 4> m{};
    const auto& g = gauss4();
    for (int q = 0; q < 4; ++q)
        m[static_cast<std::size_t>(q)] = lagrange4(g.xi[static_cast<std::size_t>(q)], stencil);
    return m;
}

} // namespace

const std::array<std::array<double, 4>, 4>& cell_interp_weights(CellKind kind) {
    // local cell is [0,1]; stencils in cell units
    static const auto left = build_weights({0.0, 1.0, 2.0, 3.0});
    static const auto interior = build_weights({-1.0, 0.0, 1.0, 2.0});
    static const auto right = build_weights({-2.0, -1.0, 0.0, 1.0});
    switch (kind) {
        case CellKind::left: return left;
        case CellKind::interior: return interior;
        case CellKind::right: return right;
    }
    return interior;
}

double cell_integral(const std::vector<double>& v, int i, double h) {
    const int n = static_cast<int>(v.size()) - 1; // cells
    const auto at = [&](int k) { return v[static_cast<std::size_t>(k)]; };
    if (n < 3) { // too few nodes for cubic; trapezoid fallback
        return 0.5 * h * (at(i) + at(i + 1));
    }
    if (i == 0)
        return h / 24.0 * (9.0 * at(0) + 19.0 * at(1) - 5.0 * at(2) + at(3));
    if (i == n - 1)
        return h / 24.0 * (at(n - 3) - 5.0 * at(n - 2) + 19.0 * at(n - 1) + 9.0 * at(n));
    return h / 24.0 * (-at(i - 1) + 13.0 * at(i) + 13.0 * at(i + 1) - at(i + 2));
}

std::vector<double> cumulative_integral(const std::vector<double>& v, double h) {
    std::vector<double> out(v.size(), 0.0);
    double acc = 0.0;
    for (int i = 0; i + 1 < static_cast<int>(v.size()); ++i) {
        acc += cell_integral(v, i, h);
        out[static_cast<std::size_t>(i) + 1] = acc;
    }
    return out;
}

double integrate(const std::function<double(double)>& f, double a, double b, int cells) {
    if (cells < 1) throw Error(ErrorCode::invalid_range, "integrate needs cells >= 1");
    const double h = (b - a) / cells;
    const auto& g = gauss4();
    double total = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double lo = a + i * h;
        double cell = 0.0;
        for (int q = 0; q < 4; ++q)
            cell += g.w[static_cast<std::size_t>(q)] * f(lo + g.xi[static_cast<std::size_t>(q)] * h);
        total += cell * h;
    }
    return total;
}

namespace {
double simpson_rule(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double m,
                     double fm, double b, double fb, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson_rule(a, fa, flm, m, fm);
    const double right = simpson_rule(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}
} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = simpson_rule(a, fa, fm, b, fb);
    return adaptive_step(f, a, fa, m, fm, b, fb, whole, tol, max_depth);
}

double interp_uniform(const std::vector<double>& v, double s0, double h, double s) {
    const int n = static_cast<int>(v.size()) - 1;
    if (n < 3) { // linear fallback
        double t = (s - s0) / h;
        int i = std::max(0, std::min(n - 1, static_cast<int>(std::floor(t))));
        t -= i;
        return (1.0 - t) * v[static_cast<std::size_t>(i)] + t * v[static_cast<std::size_t>(i) + 1];
    }
    double t = (s - s0) / h;
    int base = static_cast<int>(std::floor(t)) - 1; // stencil start
    base = std::max(0, std::min(n - 3, base));
    const double tl = t - base;
    const auto w = lagrange4(tl, {0.0, 1.0, 2.0, 3.0});
    double out = 0.0;
    for (int k = 0; k < 4; ++k)
        out += w[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(base + k)];
    return out;
}

} // namespace degenlab
