#include "degenlab/indicial.hpp"

#include "degenlab/errors.hpp"

#include <cmath>

namespace degenlab {

double Coefficient::value() const {
    if (!constant_)
        throw Error(ErrorCode::invalid_range, "coefficient is not constant");
    return value_;
}

EllipticOp1D EllipticOp1D::constant(double a, double b, double c, double lambda) {
    if (!(a > 0.0)) throw Error(ErrorCode::invalid_range, "leading coefficient needs a > 0");
    EllipticOp1D op;
    op.a = Coefficient::constant(a);
    op.b = Coefficient::constant(b);
    op.c = Coefficient::constant(c);
    op.lambda = lambda;
    op.nu = std::min(a, 1.0 / a);
    op.K = std::max({1.0, std::abs(b), std::abs(c)});
    return op;
}

IndicialRoots indicial_roots(double n_b, double n_c) {
    const double B = 1.0 + n_b;
    const double disc = B * B + 4.0 * n_c;
    if (!(disc > 1e-12))
        throw Error(ErrorCode::no_real_gap,
                    "indicial discriminant " + std::to_string(disc) + " <= 1e-12");
    const double sq = std::sqrt(disc);
    // larger-magnitude root first, companion from the product -n_c
    const double r1 = (-B - std::copysign(sq, B)) / 2.0;
    const double r2 = (r1 != 0.0) ? -n_c / r1 : -B; // r1 = 0 only when n_c = 0
    IndicialRoots out;
    out.n_b = n_b;
    out.n_c = n_c;
    out.alpha = std::min(r1, r2);
    out.beta = std::max(r1, r2);
    out.discriminant = disc;
    return out;
}

IndicialRoots indicial_roots(const EllipticOp1D& op) {
    if (!op.is_constant())
        throw Error(ErrorCode::invalid_range,
                    "indicial roots are defined for constant-coefficient operators");
    const double a = op.a.value();
    return indicial_roots(op.b.value() / a, (op.c.value() + op.lambda) / a);
}

std::pair<double, double> admissible_theta_range(double p, const IndicialRoots& roots) {
    if (!(p > 1.0)) throw Error(ErrorCode::invalid_range, "admissible range needs p > 1");
    return {roots.alpha * p, roots.beta * p};
}

EllipticOp1D conjugate_operator(const EllipticOp1D& op, double gamma) {
    const double a = op.a.value();
    const double b = op.b.value();
    const double c = op.c.value();
    EllipticOp1D out = EllipticOp1D::constant(
        a, 2.0 * a * gamma + b, -a * gamma * gamma - (a + b) * gamma + c, op.lambda);
    return out;
}

} // namespace degenlab
