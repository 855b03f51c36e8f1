#pragma once

#include "degenlab/grid.hpp"
#include "degenlab/indicial.hpp"
#include "degenlab/norms.hpp"

#include <array>
#include <optional>
#include <vector>

namespace degenlab {

// Which pair of (B1, B2) constants closes the quadrature solution:
//   below_range  (theta < alpha p): both terms cumulative integrals,
//   inside_range (alpha p < theta < beta p): x^{-alpha} term tail,
//                x^{-beta} term cumulative,
//   above_range  (theta > beta p): both terms tail integrals.
enum class Branch { below_range, inside_range, above_range };

struct ExplicitSolution {
    GridFunction u;
    Branch branch;
    double B1 = 0.0;
    double B2 = 0.0;
    IndicialRoots roots;
    double relative_residual = 0.0;
};

// Quadrature construction of the solution of -x^2 a u'' + x b u' + c u = f
// for constant coefficients (lambda folded into c), f compactly supported
// inside the grid. The branch is selected from theta against (alpha p,
// beta p) unless forced. Fails with endpoint_theta when theta is within
// 1e-9 of alpha p or beta p.
ExplicitSolution solve_explicit(const EllipticOp1D& op, const GridFunction& f,
                                const NormParams& params,
                                std::optional<Branch> force_branch = std::nullopt);

// Log-coordinate finite-difference solve of
//   -a v'' + (a+b) v' + (c+lambda) v = g,  v(s) = u(e^s),
// 2nd-order central differences, tridiagonal elimination. Boundary closure
// uses the indicial decay ratios v_0 = e^{alpha h} v_1, v_N = e^{-beta h}
// v_{N-1} for constant coefficients and zero Dirichlet otherwise. Fails
// with singular_system when an elimination pivot falls below 1e-14.
GridFunction solve_fd(const EllipticOp1D& op, const GridFunction& f, const GridPtr& grid);

// || L u - f ||_{L_{p,theta}} / max(||f||, 1e-30), L applied via 4th-order
// differences in s.
double residual(const EllipticOp1D& op, const GridFunction& u, const GridFunction& f,
                const NormParams& params);

// Applies the operator via 4th-order log-coordinate differences (the
// diagnostic operator behind `residual`).
GridFunction apply_operator(const EllipticOp1D& op, const GridFunction& u);

// lhs/rhs of the first-order-in-lambda a priori estimate
//   (1+lambda)||u|| + (1+sqrt(lambda))||x Du|| + ||x^2 D^2 u|| <= N ||f||.
struct RatioReport {
    double theta = 0.0;
    double p = 2.0;
    double lambda = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    SobolevTerms terms{};
};

RatioReport apriori_ratio(const EllipticOp1D& op, const GridFunction& f,
                          const NormParams& params, double lambda);

// Samples of the homogeneous solutions x^{-alpha}, x^{-beta}; each is
// annihilated by the operator (pointwise interior residual below 1e-8 for
// adequate grids).
std::array<GridFunction, 2> homogeneous_basis(const EllipticOp1D& op, const GridPtr& grid);

// max over interior nodes of |L v|_i / |v|_i for a never-vanishing sample
// (used to check the homogeneous basis).
double pointwise_relative_residual(const EllipticOp1D& op, const GridFunction& v);

// Divergence scan of the homogeneous-mode norms under grid extension:
// whether || x^{-gamma} ||_{L_{p,theta}} keeps growing as the grid is
// deepened toward 0 (deepen_zero) or extended toward infinity.
struct HomogeneousNormScan {
    bool alpha_diverges_at_zero;
    bool alpha_diverges_at_infinity;
    bool beta_diverges_at_zero;
    bool beta_diverges_at_infinity;

    // inside range: exactly one mode integrable at each end; outside the
    // closed range both modes become integrable at the same end, which is
    // the non-uniqueness-side marker recorded by the sweep.
    bool outside_range_flag() const {
        return (!alpha_diverges_at_zero && !beta_diverges_at_zero) ||
               (!alpha_diverges_at_infinity && !beta_diverges_at_infinity);
    }
};

HomogeneousNormScan homogeneous_norm_scan(const EllipticOp1D& op, const NormParams& params);

// Measured estimate constant: max a priori ratio over a seeded mollifier
// corpus, on a grid deep enough for theta (the tail mass scales like
// 1/dist(theta, endpoint), so the depth grows toward the endpoints, capped
// where the mode samples reach the subnormal floor). theta must lie
// strictly inside the admissible range of the lambda-folded operator.
double ratio_constant_over_corpus(const EllipticOp1D& op, double p, double theta, double lambda,
                                  int corpus_size, std::uint64_t seed);

} // namespace degenlab
