#pragma once

#include <functional>
#include <utility>

namespace degenlab {

// Coefficient of a 1D operator: constant or a function of x.
class Coefficient {
public:
    Coefficient() : constant_(true), value_(0.0) {}

    static Coefficient constant(double v) {
        Coefficient c;
        c.constant_ = true;
        c.value_ = v;
        return c;
    }
    static Coefficient of(std::function<double(double)> fn) {
        Coefficient c;
        c.constant_ = false;
        c.fn_ = std::move(fn);
        return c;
    }

    double operator()(double x) const { return constant_ ? value_ : fn_(x); }
    bool is_constant() const { return constant_; }
    double value() const; // throws unless constant

private:
    bool constant_;
    double value_ = 0.0;
    std::function<double(double)> fn_;
};

// -x^2 a u'' + x b u' + (c + lambda) u on (0, inf). nu and K are the
// declared ellipticity/bound metadata (a in [nu, 1/nu], |b|,|c| <= K).
struct EllipticOp1D {
    Coefficient a = Coefficient::constant(1.0);
    Coefficient b = Coefficient::constant(0.0);
    Coefficient c = Coefficient::constant(0.0);
    double lambda = 0.0;
    double nu = 1.0;
    double K = 1.0;

    static EllipticOp1D constant(double a, double b, double c, double lambda = 0.0);
    bool is_constant() const {
        return a.is_constant() && b.is_constant() && c.is_constant();
    }
};

// Roots of the indicial quadratic z^2 + (1+n_b) z - n_c = 0 with
// n_b = b/a, n_c = c/a. The admissible weight range is (alpha p, beta p).
struct IndicialRoots {
    double n_b;
    double n_c;
    double alpha; // smaller root
    double beta;  // larger root
    double discriminant;
};

// Fails with no_real_gap when the discriminant (1+n_b)^2 + 4 n_c <= 1e-12.
// Computed with the stable quadratic formula (larger-magnitude root first,
// the other from the product -n_c).
IndicialRoots indicial_roots(double n_b, double n_c);

// Roots for a constant-coefficient operator, folding lambda into c.
IndicialRoots indicial_roots(const EllipticOp1D& op);

// (alpha p, beta p)
std::pair<double, double> admissible_theta_range(double p, const IndicialRoots& roots);

// Operator satisfied by v = x^gamma u:
//   a' = a, b' = 2 a gamma + b, c' = -a gamma^2 - (a+b) gamma + c.
// At gamma = alpha the zeroth-order coefficient vanishes; the indicial
// roots shift to alpha - gamma, beta - gamma. lambda is carried unchanged.
EllipticOp1D conjugate_operator(const EllipticOp1D& op, double gamma);

} // namespace degenlab
