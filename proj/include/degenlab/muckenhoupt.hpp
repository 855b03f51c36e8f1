#pragma once

#include "degenlab/norms.hpp"

namespace degenlab {

struct MuckenhouptWindow {
    double t_min = 1e-3, t_max = 1e3; // |t| sample range (log spaced, plus t=0)
    double r_min = 1e-3, r_max = 1e3; // window radius range (log spaced)
    int samples = 24;                 // samples per decade direction
};

// Sampled A_q characteristic
//   sup_{r>0,t} ( avg_{[t-r,t]} omega ) ( avg_{[t-r,t]} omega^{-1/(q-1)} )^{q-1},
// a lower bound for [omega]_{A_q}; exactly 1 for the constant weight.
// Window integrals of power weights use the closed-form antiderivative.
// Fails with divergent_constant when a window integral is infinite or the
// sup keeps growing under 3x sample refinement (omega not in A_q).
double muckenhoupt_constant(const TimeWeight& omega, double q,
                            const MuckenhouptWindow& window = {});

} // namespace degenlab
