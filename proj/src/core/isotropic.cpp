#include "core/isotropic.hpp"

#include <algorithm>
#include <cmath>

#include "core/calculus.hpp"
#include "core/errors.hpp"

namespace ahk {

namespace {

void require_isotropic(const HypersurfaceSpec& spec, const char* op) {
  if (spec.ambient() != Ambient::Isotropic)
    fail(ErrorCode::AmbientMismatch, std::string(op) + " requires an isotropic spec");
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// FD cross-checks are skipped this close to a profile singularity: the
// log-cos fourth derivative grows like 6/d^4, so beneath this distance the
// stencil truncation alone exceeds the comparison tolerance.
constexpr double kFdCrossCheckMargin = 0.25;

}  // namespace

double isotropic_norm(std::span<const double> v) {
  if (v.empty()) fail(ErrorCode::InvalidArgument, "isotropic_norm needs a nonempty vector");
  double s = 0.0;
  for (size_t i = 0; i + 1 < v.size(); ++i) s += v[i] * v[i];
  return std::sqrt(s);
}

double relative_curvature(const HypersurfaceSpec& spec, std::span<const double> x) {
  require_isotropic(spec, "relative_curvature");
  const int n = spec.dim();
  const HessianPair hp = hessian_at(spec, x);
  double diag = 1.0;
  for (int k = 0; k < n; ++k) diag *= hp.hess_y(k, k);
  const double det = spec.map().det();
  const double value = det * det * diag;

  // The LU route loses relative accuracy on badly graded Hessians (huge f''
  // near a profile singularity); the Hadamard term is its roundoff scale.
  const double assembled = lu_determinant(hp.hess_x);
  const double allowance = 1e-10 * (1.0 + std::abs(value)) + 1e-12 * hadamard_bound(hp.hess_x);
  if (std::abs(value - assembled) > allowance)
    fail(ErrorCode::InternalCheck, "relative curvature routes disagree");
  return value;
}

double isotropic_mean(const HypersurfaceSpec& spec, std::span<const double> x) {
  require_isotropic(spec, "isotropic_mean");
  const int n = spec.dim();
  const std::vector<double> y = spec.map().pullback(x);
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    acc += spec.map().row_norm_sq(i) * spec.profiles()[i].derivative(2, y[i]);
  const double value = acc / n;

  if (min_singular_distance(spec, x) >= kFdCrossCheckMargin) {
    const double fd = fd_laplacian(spec, x) / n;
    const double tol = Tolerances::current().fd_cross_check;
    // The second term is the FD noise floor: eval roundoff eps*height_scale
    // amplified by 1/h^2 in the second difference.
    const double allowance =
        tol * (1.0 + std::abs(value)) + 1e-7 * height_scale(spec, x);
    if (std::abs(value - fd) > allowance)
      fail(ErrorCode::InternalCheck, "isotropic mean disagrees with the FD Laplacian");
  }
  return value;
}

PrincipalSpectrum principal_spectrum(const HypersurfaceSpec& spec, std::span<const double> x) {
  require_isotropic(spec, "principal_spectrum");
  const int n = spec.dim();
  const HessianPair hp = hessian_at(spec, x);
  SymmetricEigen eig = jacobi_eigen(hp.hess_x);

  PrincipalSpectrum out;
  out.kappas = std::move(eig.values);
  std::sort(out.kappas.begin(), out.kappas.end(), std::greater<double>());

  // Coefficients of prod_j (t + kappa_j); the coefficient of t^{n-i} is the
  // i-th elementary symmetric polynomial.
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[0] = 1.0;
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i >= 1; --i) coeffs[i] += out.kappas[j] * coeffs[i - 1];

  out.k_funcs.resize(n);
  for (int i = 1; i <= n; ++i) out.k_funcs[i - 1] = coeffs[i] / binomial(n, i);
  return out;
}

CurveSpec CurveSpec::line(std::vector<double> origin, std::vector<double> direction) {
  if (origin.size() != direction.size() || origin.size() < 2)
    fail(ErrorCode::DimensionMismatch, "line origin and direction must share a dimension >= 2");
  return CurveSpec(Shape::Line, std::move(origin), std::move(direction), 0, 0, 0.0, 0.0);
}

CurveSpec CurveSpec::coordinate_circle(int axis_p, int axis_q, std::vector<double> center,
                                       double radius, double phase) {
  const int n = static_cast<int>(center.size());
  if (n < 2) fail(ErrorCode::DimensionTooSmall, "circle needs dimension >= 2");
  if (axis_p < 0 || axis_p >= n || axis_q < 0 || axis_q >= n || axis_p == axis_q)
    fail(ErrorCode::IndexOutOfRange, "circle axes must be distinct and in range");
  if (!(radius > 0.0)) fail(ErrorCode::InvalidArgument, "circle radius must be positive");
  return CurveSpec(Shape::Circle, std::move(center), {}, axis_p, axis_q, radius, phase);
}

std::vector<double> CurveSpec::position(double s) const {
  std::vector<double> x = a_;
  if (shape_ == Shape::Line) {
    for (size_t i = 0; i < x.size(); ++i) x[i] += s * b_[i];
  } else {
    x[p_] += radius_ * std::cos(s + phase_);
    x[q_] += radius_ * std::sin(s + phase_);
  }
  return x;
}

std::vector<double> CurveSpec::first_derivative(double s) const {
  if (shape_ == Shape::Line) return b_;
  std::vector<double> d(a_.size(), 0.0);
  d[p_] = -radius_ * std::sin(s + phase_);
  d[q_] = radius_ * std::cos(s + phase_);
  return d;
}

std::vector<double> CurveSpec::second_derivative(double s) const {
  std::vector<double> d(a_.size(), 0.0);
  if (shape_ == Shape::Line) return d;
  d[p_] = -radius_ * std::cos(s + phase_);
  d[q_] = -radius_ * std::sin(s + phase_);
  return d;
}

CurveCurvature curve_curvatures(const HypersurfaceSpec& spec, const CurveSpec& curve, double s) {
  const int n = spec.dim();
  if (curve.dim() != n)
    fail(ErrorCode::DimensionMismatch, "curve dimension does not match the spec");

  const std::vector<double> x = curve.position(s);
  const std::vector<double> xp = curve.first_derivative(s);
  const std::vector<double> xpp = curve.second_derivative(s);
  const HessianPair hp = hessian_at(spec, x);

  CurveCurvature out;
  out.tan_part.resize(n + 1);
  double lift = 0.0;  // <x'', grad z>
  for (int i = 0; i < n; ++i) {
    out.tan_part[i] = xpp[i];
    lift += xpp[i] * hp.grad_x[i];
  }
  out.tan_part[n] = lift;

  double quad = 0.0;  // x'^T hess_x x'
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) quad += xp[i] * hp.hess_x(i, j) * xp[j];
  out.nor_part = quad;
  out.kappa_n = quad;

  const double tn = isotropic_norm(out.tan_part);
  out.kappa_g_by_convention = tn < 1e-12;
  out.kappa_g = out.kappa_g_by_convention ? 1.0 : tn;
  return out;
}

CurvatureReport check_constant(const HypersurfaceSpec& spec, Quantity quantity,
                               const GridSpec& grid) {
  if (quantity == Quantity::RelativeCurvature)
    return theorem_verdict(spec, TheoremId::ConstantRelativeCurvature, 0.0, grid);
  if (quantity == Quantity::IsotropicMean)
    return theorem_verdict(spec, TheoremId::ConstantIsotropicMean, 0.0, grid);
  fail(ErrorCode::InvalidArgument, "check_constant supports RelativeCurvature and IsotropicMean");
}

}  // namespace ahk
