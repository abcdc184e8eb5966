#pragma once

#include <span>
#include <vector>

#include "core/hypersurface.hpp"
#include "core/verification.hpp"

namespace ahk {

/// Norm induced by the degenerate isotropic metric: the Euclidean norm of all
/// but the last entry (the last coordinate direction has zero length).
double isotropic_norm(std::span<const double> v);

/// Relative curvature det(hess_x), evaluated as det(A)^2 * prod f_i'' and
/// cross-checked against the LU determinant of the assembled Hessian.
/// Requires an isotropic spec.
double relative_curvature(const HypersurfaceSpec& spec, std::span<const double> x);

/// Isotropic mean curvature (1/n) * trace(hess_x) = (1/n) * sum a_ij^2 f_i''.
/// Cross-checked against the finite-difference Laplacian away from profile
/// singularities. Requires an isotropic spec.
double isotropic_mean(const HypersurfaceSpec& spec, std::span<const double> x);

/// Principal curvatures (eigenvalues of hess_x, sorted descending) and the
/// normalized elementary symmetric curvature functions K_1..K_n.
struct PrincipalSpectrum {
  std::vector<double> kappas;
  std::vector<double> k_funcs;
};

PrincipalSpectrum principal_spectrum(const HypersurfaceSpec& spec, std::span<const double> x);

/// A parametrized curve s -> x(s) in the base domain, restricted to straight
/// lines and circles in a coordinate 2-plane so that the derivatives are
/// exact.
class CurveSpec {
 public:
  static CurveSpec line(std::vector<double> origin, std::vector<double> direction);
  /// x_p(s) = center_p + radius*cos(s + phase), x_q(s) = center_q +
  /// radius*sin(s + phase), all other coordinates fixed at center.
  static CurveSpec coordinate_circle(int axis_p, int axis_q, std::vector<double> center,
                                     double radius, double phase = 0.0);

  int dim() const { return static_cast<int>(a_.size()); }
  std::vector<double> position(double s) const;
  std::vector<double> first_derivative(double s) const;
  std::vector<double> second_derivative(double s) const;

 private:
  enum class Shape { Line, Circle };
  CurveSpec(Shape shape, std::vector<double> a, std::vector<double> b, int p, int q,
            double radius, double phase)
      : shape_(shape), a_(std::move(a)), b_(std::move(b)), p_(p), q_(q), radius_(radius),
        phase_(phase) {}

  Shape shape_;
  std::vector<double> a_;  // origin / center
  std::vector<double> b_;  // direction (lines only)
  int p_ = 0, q_ = 0;
  double radius_ = 0.0;
  double phase_ = 0.0;
};

/// Decomposition of the lifted curve's second derivative into its tangential
/// part and the normal coefficient, with the geodesic/normal curvature
/// functions. kappa_g falls back to 1 by convention when the tangential part
/// has zero isotropic norm; `kappa_g_by_convention` records when that
/// happened.
struct CurveCurvature {
  std::vector<double> tan_part;  // length n+1
  double nor_part = 0.0;
  double kappa_g = 0.0;
  double kappa_n = 0.0;
  bool kappa_g_by_convention = false;
};

CurveCurvature curve_curvatures(const HypersurfaceSpec& spec, const CurveSpec& curve, double s);

/// Constancy scan for RelativeCurvature or IsotropicMean with the matching
/// theorem verdict applied.
CurvatureReport check_constant(const HypersurfaceSpec& spec, Quantity quantity,
                               const GridSpec& grid);

}  // namespace ahk
