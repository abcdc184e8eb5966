#include "core/constructors.hpp"

#include <cmath>

#include "core/calculus.hpp"
#include "core/errors.hpp"

namespace ahk {

namespace {

void require_length(const std::vector<double>& v, int n, const char* name) {
  if (static_cast<int>(v.size()) != n)
    fail(ErrorCode::DimensionMismatch, std::string(name) + " must have length n");
}

}  // namespace

void EigenSolutionParams::validate(int n) const {
  if (lambda == 0.0)
    fail(ErrorCode::ZeroLambda, "lambda must be nonzero (the harmonic case is the constant-mean family)");
  require_length(c, n, "c");
  require_length(d, n, "d");
  require_length(mu, n, "mu");
  double sum = 0.0;
  for (double m : mu) sum += m;
  if (std::abs(sum) > 1e-12)
    fail(ErrorCode::CoefficientSumMismatch, "mu entries must sum to zero");
}

HypersurfaceSpec construct_crc(const AffineMap& map, double k0,
                               const std::vector<double>& c_partial,
                               const std::vector<double>& d, const std::vector<double>& e) {
  const int n = map.dim();
  if (k0 == 0.0)
    fail(ErrorCode::ZeroTargetCurvature, "target curvature must be nonzero; use construct_cylinder");
  if (static_cast<int>(c_partial.size()) != n - 1)
    fail(ErrorCode::DimensionMismatch, "c_partial must have length n-1");
  require_length(d, n, "d");
  require_length(e, n, "e");

  double product = 1.0;
  for (double c : c_partial) {
    if (c == 0.0) fail(ErrorCode::ZeroCoefficient, "quadratic coefficients must be nonzero");
    product *= c;
  }
  const double det = map.det();
  const double c_last = k0 / (std::ldexp(1.0, n) * det * det * product);

  std::vector<GeneratingFunction> profiles;
  profiles.reserve(n);
  for (int i = 0; i < n - 1; ++i)
    profiles.push_back(GeneratingFunction::quadratic(c_partial[i], d[i], e[i]));
  profiles.push_back(GeneratingFunction::quadratic(c_last, d[n - 1], e[n - 1]));
  return HypersurfaceSpec(Ambient::Isotropic, map, std::move(profiles));
}

HypersurfaceSpec construct_cimc(const AffineMap& map, double h0, const std::vector<double>& c,
                                const std::vector<double>& d, const std::vector<double>& e) {
  const int n = map.dim();
  require_length(c, n, "c");
  require_length(d, n, "d");
  require_length(e, n, "e");

  double sum = 0.0;
  for (double v : c) sum += v;
  if (std::abs(sum - n * h0) > 1e-12 * (1.0 + std::abs(n * h0)))
    fail(ErrorCode::CoefficientSumMismatch, "coefficients must sum to n*h0");

  std::vector<GeneratingFunction> profiles;
  profiles.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0.0) {
      profiles.push_back(GeneratingFunction::linear(d[i], e[i]));
    } else {
      profiles.push_back(
          GeneratingFunction::quadratic(0.5 * c[i] / map.row_norm_sq(i), d[i], e[i]));
    }
  }
  return HypersurfaceSpec(Ambient::Isotropic, map, std::move(profiles));
}

HypersurfaceSpec construct_eigen(const AffineMap& map, const EigenSolutionParams& params) {
  const int n = map.dim();
  params.validate(n);

  std::vector<GeneratingFunction> profiles;
  profiles.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double shift = -params.mu[i] / params.lambda;
    if (params.c[i] == 0.0 && params.d[i] == 0.0) {
      // Degenerate constant solution of the profile ODE.
      profiles.push_back(GeneratingFunction::linear(0.0, shift));
    } else if (params.lambda > 0.0) {
      const double rate = std::sqrt(params.lambda / map.row_norm_sq(i));
      profiles.push_back(GeneratingFunction::exp_pair(params.c[i], params.d[i], rate, shift));
    } else {
      const double rate = std::sqrt(-params.lambda / map.row_norm_sq(i));
      profiles.push_back(GeneratingFunction::trig_pair(params.c[i], params.d[i], rate, shift));
    }
  }
  return HypersurfaceSpec(Ambient::Isotropic, map, std::move(profiles));
}

HypersurfaceSpec construct_cylinder(const AffineMap& map, int linear_index, double slope,
                                    double intercept, std::vector<GeneratingFunction> others,
                                    Ambient ambient) {
  const int n = map.dim();
  if (linear_index < 0 || linear_index >= n)
    fail(ErrorCode::IndexOutOfRange, "linear profile index must be in [0, n)");
  if (static_cast<int>(others.size()) != n - 1)
    fail(ErrorCode::DimensionMismatch, "need n-1 companion profiles");

  std::vector<GeneratingFunction> profiles;
  profiles.reserve(n);
  auto it = others.begin();
  for (int i = 0; i < n; ++i) {
    if (i == linear_index)
      profiles.push_back(GeneratingFunction::linear(slope, intercept));
    else
      profiles.push_back(std::move(*it++));
  }
  return HypersurfaceSpec(ambient, map, std::move(profiles));
}

CurvatureReport verify_eigen_condition(const HypersurfaceSpec& spec, double lambda,
                                       const GridSpec& grid) {
  if (spec.ambient() != Ambient::Isotropic)
    fail(ErrorCode::AmbientMismatch, "the eigenfunction condition lives in the isotropic ambient");

  const int n = spec.dim();
  const Tolerances tol = Tolerances::current();
  std::vector<double> residuals;
  double max_abs_z = 0.0;
  long skipped = 0;

  detail::for_each_grid_point(spec, grid, [&](std::span<const double> x, bool excluded) {
    if (excluded) {
      ++skipped;
      return;
    }
    const std::vector<double> y = spec.map().pullback(x);
    double z = 0.0;
    double lap = 0.0;
    for (int i = 0; i < n; ++i) {
      z += spec.profiles()[i](y[i]);
      lap += spec.map().row_norm_sq(i) * spec.profiles()[i].derivative(2, y[i]);
    }
    max_abs_z = std::max(max_abs_z, std::abs(z));
    residuals.push_back(std::abs(lap - lambda * z));

    if (min_singular_distance(spec, x) >= 0.25) {
      const double fd = fd_laplacian(spec, x);
      const double allowance =
          tol.fd_cross_check * (1.0 + std::abs(lap)) + 1e-6 * height_scale(spec, x);
      if (std::abs(lap - fd) > allowance)
        fail(ErrorCode::InternalCheck, "analytic Laplacian disagrees with the FD Laplacian");
    }
  });

  CurvatureReport report = detail::make_report("eigen_residual", residuals, skipped);
  report.verdict = report.max <= tol.eigen_residual * (1.0 + max_abs_z)
                       ? Verdict::ConfirmsTheorem
                       : Verdict::NotApplicable;
  return report;
}

}  // namespace ahk
