#pragma once

#include "degenlab/grid.hpp"
#include "degenlab/norms.hpp"

namespace degenlab {

// Smooth bump zeta on (0,inf) supported in [e^{-1}, e], scaled so the
// covering sum  sum_n zeta^p(e^{s-n}) >= margin  holds for the p it was
// built for. zeta(z) = scale * m(log z) with m the standard mollifier.
class DyadicCutoff {
public:
    static DyadicCutoff make(double p, double margin = 1.05);

    double operator()(double z) const;   // in the original coordinate z > 0
    double at_sigma(double sigma) const; // zeta(e^sigma)
    double scale() const { return scale_; }
    double p() const { return p_; }

    // min over s of sum_n zeta^p(e^{s-n}), evaluated on a fine sample
    double covering_min(int samples = 20001) const;

private:
    DyadicCutoff(double p, double scale) : p_(p), scale_(scale) {}
    double p_;
    double scale_;
};

// Equivalent dyadic-sum norm
//   ( sum_m e^{m(theta+d-1)} || u(e^m .) zeta ||_{W_p^order}^p )^{1/p},
// d = 1 here; the m-sum is truncated when terms fall below 1e-14 times the
// running sum.
double dyadic_norm(const GridFunction& u, int order, const NormParams& params,
                   const DyadicCutoff& zeta);

} // namespace degenlab
