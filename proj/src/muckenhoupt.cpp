#include "degenlab/muckenhoupt.hpp"

#include "degenlab/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace degenlab {

namespace {

// int_a^b |t|^g dt, +inf when the interval touches 0 and g <= -1.
double power_integral(double a, double b, double g) {
    if (a > b) std::swap(a, b);
    if (g <= -1.0 && a <= 0.0 && b >= 0.0) return std::numeric_limits<double>::infinity();
    if (g == -1.0) // interval away from zero here, integrand positive
        return std::abs(std::log(std::abs(b)) - std::log(std::abs(a)));
    const auto anti = [g](double t) {
        if (t == 0.0) return 0.0;
        return std::copysign(std::pow(std::abs(t), g + 1.0) / (g + 1.0), t);
    };
    return anti(b) - anti(a);
}

double window_product(const TimeWeight& w, double q, double t, double r) {
    if (w.kind == TimeWeight::Kind::constant_one) return 1.0;
    const double g = w.gamma;
    const double m1 = power_integral(t - r, t, g) / r;
    const double m2 = power_integral(t - r, t, -g / (q - 1.0)) / r;
    if (!std::isfinite(m1) || !std::isfinite(m2))
        return std::numeric_limits<double>::infinity();
    return m1 * std::pow(m2, q - 1.0);
}

double sampled_sup(const TimeWeight& w, double q, const MuckenhouptWindow& win, int refine) {
    const int per = win.samples * refine;
    std::vector<double> ts, rs;
    ts.push_back(0.0);
    const double lt = std::log(win.t_max / win.t_min);
    const double lr = std::log(win.r_max / win.r_min);
    for (int i = 0; i <= per; ++i) {
        const double t = win.t_min * std::exp(lt * i / per);
        ts.push_back(t);
        ts.push_back(-t);
        rs.push_back(win.r_min * std::exp(lr * i / per));
    }
    double sup = 0.0;
    for (double t : ts)
        for (double r : rs) {
            const double v = window_product(w, q, t, r);
            if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
            sup = std::max(sup, v);
        }
    return sup;
}

} // namespace

double muckenhoupt_constant(const TimeWeight& omega, double q, const MuckenhouptWindow& window) {
    if (!(q > 1.0)) throw Error(ErrorCode::invalid_range, "A_q needs q > 1");
    if (omega.kind == TimeWeight::Kind::constant_one) return 1.0;

    double prev = 0.0;
    for (int refine = 1; refine <= 4; refine *= 2) {
        const double sup = sampled_sup(omega, q, window, refine);
        if (!std::isfinite(sup))
            throw Error(ErrorCode::divergent_constant,
                        "window average is infinite; weight not in A_q");
        if (refine > 1 && sup > 1.5 * prev)
            throw Error(ErrorCode::divergent_constant,
                        "sampled sup keeps growing under refinement; weight not in A_q");
        prev = sup;
    }
    return prev;
}

} // namespace degenlab
