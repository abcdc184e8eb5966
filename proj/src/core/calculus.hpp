#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/hypersurface.hpp"
#include "core/matrix.hpp"

namespace ahk {

/// Exact first/second derivative data of the height function in both
/// coordinate systems. hess_y is diagonal by construction (off-diagonals are
/// exact zeros); hess_x = A^T * hess_y * A is assembled symmetrically.
struct HessianPair {
  std::vector<double> grad_y;  // f_i'(y_i)
  std::vector<double> grad_x;  // sum_k a_ki f_k'(y_k)
  SquareMatrix hess_y;         // diag(f_i''(y_i))
  SquareMatrix hess_x;         // sum_k a_ki a_kj f_k''(y_k)
};

HessianPair hessian_at(const HypersurfaceSpec& spec, std::span<const double> x);

/// Returns (det hess_x, det(A)^2 * prod f_i''). The two sides are computed by
/// independent routes (LU on the assembled matrix vs. the diagonal product)
/// and must agree.
std::pair<double, double> det_hessian_identity(const HypersurfaceSpec& spec,
                                               std::span<const double> x);

/// Default base steps; each stencil leg is additionally scaled by (1+|x_i|).
inline constexpr double kDefaultGradientStep = 1e-5;
inline constexpr double kDefaultHessianStep = 1e-4;

/// Finite-difference stencils abort with Error(DomainSingularity) when any
/// stencil point comes within this distance of a profile singularity.
inline constexpr double kStencilSingularMargin = 1e-6;

/// Central differences of eval_height only; independent of the analytic path.
std::vector<double> fd_gradient(const HypersurfaceSpec& spec, std::span<const double> x,
                                double h = kDefaultGradientStep);

/// Symmetric 4-point second-difference stencil on eval_height only.
SquareMatrix fd_hessian(const HypersurfaceSpec& spec, std::span<const double> x,
                        double h = kDefaultHessianStep);

/// Trace of the finite-difference Hessian via the cheaper 1-D stencils.
double fd_laplacian(const HypersurfaceSpec& spec, std::span<const double> x,
                    double h = kDefaultHessianStep);

}  // namespace ahk
