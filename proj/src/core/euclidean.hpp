#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/hypersurface.hpp"
#include "core/verification.hpp"

namespace ahk {

/// Gauss-Kronecker curvature of the graph at one point.
///   k        = det(A)^2 * prod f_i'' / w^{(n+2)/2}
///   w        = 1 + |grad z|^2  (always >= 1)
///   det_hess = prod f_i''(y_i), the determinant of the diagonal Hessian in
///              the pulled-back coordinates (the numerator before the
///              det(A)^2 factor)
struct GaussKroneckerValue {
  double k = 0.0;
  double w = 1.0;
  double det_hess = 0.0;
};

/// Evaluates K through the specialized product form and cross-checks it
/// against the generic det(hess_x)/w^{(n+2)/2} route; the two must agree to
/// 1e-10 relative. Requires a Euclidean spec.
GaussKroneckerValue gauss_kronecker(const HypersurfaceSpec& spec, std::span<const double> x);

/// A detected ruling: profile `index` is linear, and `ruling` is the
/// direction (column `index` of A^{-1} extended by the profile slope) along
/// which the hypersurface is a cylinder.
struct CylinderDetection {
  int index = 0;
  std::vector<double> ruling;  // length n+1
};

/// Smallest-index linear profile, or nullopt when every profile is
/// non-linear.
std::optional<CylinderDetection> detect_cylinder(const HypersurfaceSpec& spec);

/// Grid scan of the Gauss-Kronecker curvature with the cylinder-flatness
/// verdict applied: a constant scan must have zero mean and a detected
/// ruling, otherwise the report flags ViolatesTheorem.
CurvatureReport check_constant_gk(const HypersurfaceSpec& spec, const GridSpec& grid);

}  // namespace ahk
