#pragma once

#include <vector>

#include "core/hypersurface.hpp"
#include "core/verification.hpp"

namespace ahk {

/// Parameters of the Laplacian-eigenfunction family: lambda != 0, per-profile
/// amplitudes (c, d) and inhomogeneity constants mu with sum(mu) = 0.
struct EigenSolutionParams {
  double lambda = 0.0;
  std::vector<double> c;
  std::vector<double> d;
  std::vector<double> mu;

  /// Throws on lambda == 0, mismatched lengths or |sum(mu)| > 1e-12.
  void validate(int n) const;
};

/// Quadratic family with constant relative curvature k0 != 0. The first n-1
/// quadratic coefficients are given; the last one is solved from
///   prod c_i = k0 / (2^n det(A)^2).
/// Profiles are c_i*y^2 + d_i*y + e_i. The result is isotropic.
HypersurfaceSpec construct_crc(const AffineMap& map, double k0,
                               const std::vector<double>& c_partial,
                               const std::vector<double>& d, const std::vector<double>& e);

/// Quadratic/linear family with constant isotropic mean h0. Requires
/// sum(c) = n*h0; profile i is (c_i/2)/(sum_j a_ij^2)*y^2 + d_i*y + e_i, and
/// degenerates to the linear kind when c_i = 0.
HypersurfaceSpec construct_cimc(const AffineMap& map, double h0, const std::vector<double>& c,
                                const std::vector<double>& d, const std::vector<double>& e);

/// Laplacian-eigenfunction family: exp pairs for lambda > 0, trig pairs for
/// lambda < 0, with rate sqrt(|lambda| / sum_j a_ij^2) and per-profile shift
/// -mu_i/lambda. A profile with c_i = d_i = 0 degenerates to the constant
/// linear profile -mu_i/lambda.
HypersurfaceSpec construct_eigen(const AffineMap& map, const EigenSolutionParams& params);

/// Replaces profile `linear_index` with slope*y + intercept; the remaining
/// n-1 profiles are taken from `others` in order. Both curvatures of the
/// result vanish identically.
HypersurfaceSpec construct_cylinder(const AffineMap& map, int linear_index, double slope,
                                    double intercept, std::vector<GeneratingFunction> others,
                                    Ambient ambient = Ambient::Euclidean);

/// Samples |laplacian(z) - lambda*z| over the grid using the analytic
/// Laplacian sum_{i,j} a_ij^2 f_i''(y_i), cross-checking against the
/// finite-difference Laplacian away from singularities. The verdict is
/// ConfirmsTheorem when the max residual is within tolerance of zero
/// (relative to 1 + max|z|), NotApplicable otherwise.
CurvatureReport verify_eigen_condition(const HypersurfaceSpec& spec, double lambda,
                                       const GridSpec& grid);

}  // namespace ahk
