#pragma once

#include <array>
#include <functional>
#include <vector>

namespace degenlab {

// 4-point Gauss-Legendre rule on [0,1].
struct Gauss4 {
    std::array<double, 4> xi;
    std::array<double, 4> w;
};
const Gauss4& gauss4();

// Weights of the cubic Lagrange interpolant at the 4 Gauss points of a cell.
// Row g gives the 4 node weights; the node stencil is {i-1,i,i+1,i+2} for
// interior cells and one-sided at the ends.
enum class CellKind { left, interior, right };
const std::array<std::array<double, 4>, 4>& cell_interp_weights(CellKind kind);

// Integral over cell i of the cubic through the 4-node stencil, closed form.
// With h the uniform spacing, this is the O(h^4) cumulative building block.
double cell_integral(const std::vector<double>& v, int i, double h);

// Prefix sums of cell integrals: out[i] = integral from node 0 to node i.
std::vector<double> cumulative_integral(const std::vector<double>& v, double h);

// Composite Gauss-Legendre of a callable on [a,b] with n uniform cells
// (exact evaluations, O(h^8) for smooth integrands).
double integrate(const std::function<double(double)>& f, double a, double b, int cells);

// Adaptive Simpson to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

// Cubic Lagrange interpolation of uniformly sampled v (spacing h, origin s0)
// at point s (clamped stencils at the ends).
double interp_uniform(const std::vector<double>& v, double s0, double h, double s);

} // namespace degenlab
