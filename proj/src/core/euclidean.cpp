#include "core/euclidean.hpp"

#include <cmath>

#include "core/calculus.hpp"
#include "core/errors.hpp"

namespace ahk {

GaussKroneckerValue gauss_kronecker(const HypersurfaceSpec& spec, std::span<const double> x) {
  if (spec.ambient() != Ambient::Euclidean)
    fail(ErrorCode::AmbientMismatch, "gauss_kronecker requires a Euclidean spec");

  const int n = spec.dim();
  const HessianPair hp = hessian_at(spec, x);

  double diag = 1.0;
  for (int k = 0; k < n; ++k) diag *= hp.hess_y(k, k);

  double grad_sq = 0.0;
  for (double g : hp.grad_x) grad_sq += g * g;

  GaussKroneckerValue out;
  out.w = 1.0 + grad_sq;
  out.det_hess = diag;
  const double denom = std::pow(out.w, 0.5 * (n + 2));
  const double det = spec.map().det();
  out.k = det * det * diag / denom;

  // Generic route through the assembled Hessian in the base coordinates. The
  // Hadamard term covers LU roundoff on badly graded Hessians near profile
  // singularities.
  const double k_generic = lu_determinant(hp.hess_x) / denom;
  const double allowance =
      1e-10 * (1.0 + std::abs(out.k)) + 1e-12 * hadamard_bound(hp.hess_x) / denom;
  if (std::abs(out.k - k_generic) > allowance)
    fail(ErrorCode::InternalCheck, "specialized and generic curvature routes disagree");
  return out;
}

std::optional<CylinderDetection> detect_cylinder(const HypersurfaceSpec& spec) {
  const int n = spec.dim();
  for (int p = 0; p < n; ++p) {
    if (!spec.profiles()[p].is_linear()) continue;
    CylinderDetection d;
    d.index = p;
    d.ruling.resize(n + 1);
    for (int i = 0; i < n; ++i) d.ruling[i] = spec.map().inverse()(i, p);
    d.ruling[n] = spec.profiles()[p].derivative(1, 0.0);  // constant slope
    return d;
  }
  return std::nullopt;
}

CurvatureReport check_constant_gk(const HypersurfaceSpec& spec, const GridSpec& grid) {
  return theorem_verdict(spec, TheoremId::CylinderFlatness, 0.0, grid);
}

}  // namespace ahk
