#pragma once

#include <vector>

namespace degenlab {

// 4th-order finite differences on a uniform grid with one-sided closures at
// the two first/last rows. Applied in the log coordinate these give
// x d/dx u = d/ds v and x^2 d^2/dx^2 u = (d^2/ds^2 - d/ds) v exactly in the
// continuum, so the degenerate factors never multiply raw differences.
std::vector<double> diff1_4th(const std::vector<double>& v, double h);
std::vector<double> diff2_4th(const std::vector<double>& v, double h);

// 2nd-order central variants (used by the FD solvers' stencil checks).
std::vector<double> diff1_2nd(const std::vector<double>& v, double h);
std::vector<double> diff2_2nd(const std::vector<double>& v, double h);

} // namespace degenlab
