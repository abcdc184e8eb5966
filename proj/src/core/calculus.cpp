#include "core/calculus.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ahk {

namespace {

void require_step(double h) {
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "finite-difference step must be positive");
}

}  // namespace

HessianPair hessian_at(const HypersurfaceSpec& spec, std::span<const double> x) {
  const int n = spec.dim();
  const AffineMap& map = spec.map();
  const std::vector<double> y = map.pullback(x);

  HessianPair out;
  out.grad_y.resize(n);
  std::vector<double> f2(n);
  for (int k = 0; k < n; ++k) {
    out.grad_y[k] = spec.profiles()[k].derivative(1, y[k]);
    f2[k] = spec.profiles()[k].derivative(2, y[k]);
  }

  const SquareMatrix& a = map.entries();
  out.grad_x.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += a(k, i) * out.grad_y[k];
    out.grad_x[i] = acc;
  }

  out.hess_y = SquareMatrix(n);
  for (int k = 0; k < n; ++k) out.hess_y(k, k) = f2[k];

  out.hess_x = SquareMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += a(k, i) * a(k, j) * f2[k];
      out.hess_x(i, j) = acc;
      out.hess_x(j, i) = acc;
    }
  return out;
}

std::pair<double, double> det_hessian_identity(const HypersurfaceSpec& spec,
                                               std::span<const double> x) {
  const HessianPair hp = hessian_at(spec, x);
  const double lhs = lu_determinant(hp.hess_x);
  double diag = 1.0;
  for (int k = 0; k < spec.dim(); ++k) diag *= hp.hess_y(k, k);
  const double det = spec.map().det();
  return {lhs, det * det * diag};
}

std::vector<double> fd_gradient(const HypersurfaceSpec& spec, std::span<const double> x,
                                double h) {
  require_step(h);
  const int n = spec.dim();
  std::vector<double> g(n);
  std::vector<double> p(x.begin(), x.end());
  for (int i = 0; i < n; ++i) {
    const double hi = h * (1.0 + std::abs(x[i]));
    p[i] = x[i] + hi;
    const double fwd = eval_height_guarded(spec, p, kStencilSingularMargin);
    p[i] = x[i] - hi;
    const double bwd = eval_height_guarded(spec, p, kStencilSingularMargin);
    p[i] = x[i];
    g[i] = (fwd - bwd) / (2.0 * hi);
  }
  return g;
}

SquareMatrix fd_hessian(const HypersurfaceSpec& spec, std::span<const double> x, double h) {
  require_step(h);
  const int n = spec.dim();
  SquareMatrix out(n);
  std::vector<double> p(x.begin(), x.end());
  auto at = [&](int i, double si, int j, double sj) {
    p[i] += si;
    p[j] += sj;
    const double v = eval_height_guarded(spec, p, kStencilSingularMargin);
    p[i] = x[i];
    p[j] = x[j];
    return v;
  };
  for (int i = 0; i < n; ++i) {
    const double hi = h * (1.0 + std::abs(x[i]));
    for (int j = i; j < n; ++j) {
      const double hj = h * (1.0 + std::abs(x[j]));
      const double v = (at(i, hi, j, hj) - at(i, hi, j, -hj) - at(i, -hi, j, hj) +
                        at(i, -hi, j, -hj)) /
                       (4.0 * hi * hj);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

double fd_laplacian(const HypersurfaceSpec& spec, std::span<const double> x, double h) {
  require_step(h);
  const int n = spec.dim();
  const double center = eval_height_guarded(spec, x, kStencilSingularMargin);
  std::vector<double> p(x.begin(), x.end());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double hi = h * (1.0 + std::abs(x[i]));
    p[i] = x[i] + hi;
    const double fwd = eval_height_guarded(spec, p, kStencilSingularMargin);
    p[i] = x[i] - hi;
    const double bwd = eval_height_guarded(spec, p, kStencilSingularMargin);
    p[i] = x[i];
    acc += (fwd - 2.0 * center + bwd) / (hi * hi);
  }
  return acc;
}

}  // namespace ahk
