#include "core/verification.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "core/calculus.hpp"
#include "core/constructors.hpp"
#include "core/errors.hpp"
#include "core/euclidean.hpp"
#include "core/isotropic.hpp"

namespace ahk {

namespace {

double tolerance_scale() {
  const char* raw = std::getenv("AHK_TOLERANCE_SCALE");
  if (raw == nullptr) return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || !std::isfinite(v) || v <= 0.0) return 1.0;
  return v;
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void validate_grid(const HypersurfaceSpec& spec, const GridSpec& grid) {
  const int n = spec.dim();
  if (grid.dim() != n || static_cast<int>(grid.hi.size()) != n)
    fail(ErrorCode::DimensionMismatch, "grid bounds must match the spec dimension");
  if (grid.points_per_axis < 2)
    fail(ErrorCode::InvalidArgument, "grid needs at least 2 points per axis");
  if (grid.exclusion_radius < 0.0)
    fail(ErrorCode::InvalidArgument, "exclusion radius must be nonnegative");
  double total = 1.0;
  for (int i = 0; i < n; ++i) {
    if (!(grid.lo[i] < grid.hi[i]))
      fail(ErrorCode::InvalidArgument, "grid bounds must satisfy lo < hi on every axis");
    total *= grid.points_per_axis;
  }
  if (total > 1e7) fail(ErrorCode::InvalidArgument, "grid exceeds the 1e7 point guard");
}

}  // namespace

GridSpec GridSpec::uniform(int n, double lo, double hi, int points_per_axis,
                           double exclusion_radius) {
  GridSpec g;
  g.lo.assign(n, lo);
  g.hi.assign(n, hi);
  g.points_per_axis = points_per_axis;
  g.exclusion_radius = exclusion_radius;
  return g;
}

Tolerances Tolerances::current() {
  const double s = tolerance_scale();
  Tolerances t;
  t.constancy *= s;
  t.zero_mean *= s;
  t.structure *= s;
  t.mean_sum *= s;
  t.eigen_residual *= s;
  t.fd_cross_check *= s;
  return t;
}

namespace detail {

void for_each_grid_point(const HypersurfaceSpec& spec, const GridSpec& grid,
                         const std::function<void(std::span<const double>, bool)>& visit) {
  validate_grid(spec, grid);
  const int n = spec.dim();
  const int pts = grid.points_per_axis;
  std::vector<double> step(n);
  for (int i = 0; i < n; ++i) step[i] = (grid.hi[i] - grid.lo[i]) / (pts - 1);

  std::vector<int> idx(n, 0);
  std::vector<double> x(n);
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = grid.lo[i] + idx[i] * step[i];
    const bool excluded = grid.exclusion_radius > 0.0 &&
                          min_singular_distance(spec, x) <= grid.exclusion_radius;
    visit(x, excluded);

    int axis = n - 1;
    while (axis >= 0 && ++idx[axis] == pts) idx[axis--] = 0;
    if (axis < 0) break;
  }
}

CurvatureReport make_report(std::string quantity_name, const std::vector<double>& samples,
                            long skipped) {
  if (samples.empty()) fail(ErrorCode::EmptyGrid, "every grid point was excluded");

  CurvatureReport r;
  r.quantity = std::move(quantity_name);
  r.samples = static_cast<long>(samples.size());
  r.skipped = skipped;
  r.min = std::numeric_limits<double>::infinity();
  r.max = -std::numeric_limits<double>::infinity();

  KahanSum sum;
  for (double v : samples) {
    r.min = std::min(r.min, v);
    r.max = std::max(r.max, v);
    sum.add(v);
  }
  r.mean = sum.sum / r.samples;

  // Variance around the first sample to dodge catastrophic cancellation.
  const double shift = samples.front();
  KahanSum sq;
  for (double v : samples) sq.add((v - shift) * (v - shift));
  const double mean_shifted = r.mean - shift;
  r.stddev = std::sqrt(std::max(0.0, sq.sum / r.samples - mean_shifted * mean_shifted));

  const Tolerances tol = Tolerances::current();
  r.is_constant = (r.max - r.min) <= tol.constancy * (1.0 + std::abs(r.mean));
  if (r.is_constant) r.constant_value = r.mean;
  return r;
}

std::string quantity_name(const QuantityRequest& request) {
  switch (request.quantity) {
    case Quantity::GaussKronecker: return "gk";
    case Quantity::RelativeCurvature: return "relative";
    case Quantity::IsotropicMean: return "mean";
    case Quantity::PrincipalMax: return "principal";
    case Quantity::CurvatureFunction: return "k" + std::to_string(request.ki_index);
    case Quantity::EigenResidual: return "eigen_residual";
  }
  fail(ErrorCode::InternalCheck, "unreachable quantity");
}

void require_ambient(const HypersurfaceSpec& spec, const QuantityRequest& request) {
  const bool euclidean = spec.ambient() == Ambient::Euclidean;
  if (request.quantity == Quantity::GaussKronecker) {
    if (!euclidean) fail(ErrorCode::AmbientMismatch, "gk requires a Euclidean spec");
  } else {
    if (euclidean)
      fail(ErrorCode::AmbientMismatch,
           detail::quantity_name(request) + " requires an isotropic spec");
  }
  if (request.quantity == Quantity::CurvatureFunction &&
      (request.ki_index < 1 || request.ki_index > spec.dim()))
    fail(ErrorCode::IndexOutOfRange, "curvature function index must be in [1, n]");
}

double evaluate_quantity(const HypersurfaceSpec& spec, const QuantityRequest& request,
                         std::span<const double> x) {
  switch (request.quantity) {
    case Quantity::GaussKronecker: return gauss_kronecker(spec, x).k;
    case Quantity::RelativeCurvature: return relative_curvature(spec, x);
    case Quantity::IsotropicMean: return isotropic_mean(spec, x);
    case Quantity::PrincipalMax: return principal_spectrum(spec, x).kappas.front();
    case Quantity::CurvatureFunction:
      return principal_spectrum(spec, x).k_funcs[request.ki_index - 1];
    case Quantity::EigenResidual: {
      const std::vector<double> y = spec.map().pullback(x);
      double z = 0.0, lap = 0.0;
      for (int i = 0; i < spec.dim(); ++i) {
        z += spec.profiles()[i](y[i]);
        lap += spec.map().row_norm_sq(i) * spec.profiles()[i].derivative(2, y[i]);
      }
      return std::abs(lap - request.lambda * z);
    }
  }
  fail(ErrorCode::InternalCheck, "unreachable quantity");
}

}  // namespace detail

CurvatureReport scan(const HypersurfaceSpec& spec, const QuantityRequest& request,
                     const GridSpec& grid) {
  detail::require_ambient(spec, request);
  std::vector<double> samples;
  long skipped = 0;
  detail::for_each_grid_point(spec, grid, [&](std::span<const double> x, bool excluded) {
    if (excluded) {
      ++skipped;
      return;
    }
    samples.push_back(detail::evaluate_quantity(spec, request, x));
  });
  return detail::make_report(detail::quantity_name(request), samples, skipped);
}

namespace {

// Structural test: every profile has a constant, nonzero second derivative.
// Returns the product of the quadratic coefficients (f'' / 2) or nullopt.
std::optional<double> quadratic_coefficient_product(const HypersurfaceSpec& spec) {
  double product = 1.0;
  for (const auto& f : spec.profiles()) {
    const auto sdc = f.constant_second_derivative();
    if (!sdc.has_value() || *sdc == 0.0) return std::nullopt;
    product *= 0.5 * *sdc;
  }
  return product;
}

Verdict cylinder_flatness_verdict(const HypersurfaceSpec& spec, const CurvatureReport& report,
                                  const Tolerances& tol) {
  if (!report.is_constant) return Verdict::NotApplicable;
  const bool zero = std::abs(report.mean) <= tol.zero_mean;
  const bool ruled = detect_cylinder(spec).has_value();
  return (zero && ruled) ? Verdict::ConfirmsTheorem : Verdict::ViolatesTheorem;
}

Verdict constant_relative_verdict(const HypersurfaceSpec& spec, const CurvatureReport& report,
                                  const Tolerances& tol) {
  if (!report.is_constant) return Verdict::NotApplicable;
  if (std::abs(report.mean) <= tol.zero_mean)
    return detect_cylinder(spec).has_value() ? Verdict::ConfirmsTheorem
                                             : Verdict::ViolatesTheorem;
  const auto product = quadratic_coefficient_product(spec);
  if (!product.has_value()) return Verdict::ViolatesTheorem;
  const double det = spec.map().det();
  const double expected = report.mean / (std::ldexp(1.0, spec.dim()) * det * det);
  return std::abs(*product - expected) <= tol.structure * (1.0 + std::abs(expected))
             ? Verdict::ConfirmsTheorem
             : Verdict::ViolatesTheorem;
}

Verdict constant_mean_verdict(const HypersurfaceSpec& spec, const CurvatureReport& report,
                              const Tolerances& tol) {
  if (!report.is_constant) return Verdict::NotApplicable;
  double coefficient_sum = 0.0;
  for (int i = 0; i < spec.dim(); ++i) {
    const auto sdc = spec.profiles()[i].constant_second_derivative();
    if (!sdc.has_value()) return Verdict::ViolatesTheorem;
    coefficient_sum += *sdc * spec.map().row_norm_sq(i);
  }
  const double target = spec.dim() * report.mean;
  return std::abs(coefficient_sum - target) <= tol.mean_sum * (1.0 + std::abs(target))
             ? Verdict::ConfirmsTheorem
             : Verdict::ViolatesTheorem;
}

Verdict eigenfunction_verdict(const HypersurfaceSpec& spec, const CurvatureReport& report,
                              double lambda, const Tolerances& tol) {
  if (lambda == 0.0) return Verdict::NotApplicable;
  if (report.verdict != Verdict::ConfirmsTheorem) return Verdict::NotApplicable;
  using Kind = GeneratingFunction::Kind;
  for (int i = 0; i < spec.dim(); ++i) {
    const auto& f = spec.profiles()[i];
    if (f.is_linear()) {
      if (f.derivative(1, 0.0) != 0.0) return Verdict::ViolatesTheorem;
      continue;  // degenerate constant solution
    }
    const Kind expected_kind = lambda > 0.0 ? Kind::ExpPair : Kind::TrigPair;
    if (f.kind() != expected_kind) return Verdict::ViolatesTheorem;
    const double expected_rate = std::sqrt(std::abs(lambda) / spec.map().row_norm_sq(i));
    const double rate = f.params()[2];
    if (std::abs(rate - expected_rate) > tol.structure * (1.0 + expected_rate))
      return Verdict::ViolatesTheorem;
  }
  return Verdict::ConfirmsTheorem;
}

}  // namespace

CurvatureReport theorem_verdict(const HypersurfaceSpec& spec, TheoremId theorem, double lambda,
                                const GridSpec& grid) {
  const Tolerances tol = Tolerances::current();
  switch (theorem) {
    case TheoremId::CylinderFlatness: {
      CurvatureReport report = scan(spec, {Quantity::GaussKronecker}, grid);
      report.verdict = cylinder_flatness_verdict(spec, report, tol);
      return report;
    }
    case TheoremId::ConstantRelativeCurvature: {
      CurvatureReport report = scan(spec, {Quantity::RelativeCurvature}, grid);
      report.verdict = constant_relative_verdict(spec, report, tol);
      return report;
    }
    case TheoremId::ConstantIsotropicMean: {
      CurvatureReport report = scan(spec, {Quantity::IsotropicMean}, grid);
      report.verdict = constant_mean_verdict(spec, report, tol);
      return report;
    }
    case TheoremId::LaplacianEigenfunction: {
      CurvatureReport report = verify_eigen_condition(spec, lambda, grid);
      report.verdict = eigenfunction_verdict(spec, report, lambda, tol);
      return report;
    }
  }
  fail(ErrorCode::InternalCheck, "unreachable theorem id");
}

double Rng::uniform(double lo, double hi) {
  // 53-bit mantissa mapping; identical across platforms.
  const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

int Rng::uniform_int(int lo, int hi_inclusive) {
  const auto range = static_cast<std::uint64_t>(hi_inclusive - lo) + 1;
  return lo + static_cast<int>(eng_() % range);
}

bool Rng::coin(double p) { return uniform(0.0, 1.0) < p; }

double Rng::signed_magnitude(double lo, double hi) {
  const double m = uniform(lo, hi);
  return coin() ? m : -m;
}

AffineMap random_affine_map(Rng& rng, int n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SquareMatrix m(n);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rows[i][j] = rng.uniform(-2.0, 2.0);
    if (std::abs(lu_determinant(m)) < 0.1) continue;
    AffineMap map = AffineMap::from_rows(rows);
    if (map.is_orthogonal()) continue;
    return map;
  }
  fail(ErrorCode::InternalCheck, "failed to draw an invertible map");
}

GeneratingFunction random_profile(Rng& rng, const ProfileOptions& options) {
  while (true) {
    switch (rng.uniform_int(0, 10)) {
      case 0:
      case 1:
      case 2:
        return GeneratingFunction::quadratic(rng.signed_magnitude(0.3, 1.5),
                                             rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      case 3:
      case 4: {
        const int degree = rng.uniform_int(2, 4);
        std::vector<double> coeffs(degree + 1);
        for (int k = 0; k < degree; ++k) coeffs[k] = rng.uniform(-0.5, 0.5);
        coeffs[degree] = rng.signed_magnitude(0.3, 1.0);
        return GeneratingFunction::polynomial(std::move(coeffs));
      }
      case 5:
      case 6:
        return GeneratingFunction::exp_pair(rng.signed_magnitude(0.3, 1.0),
                                            rng.signed_magnitude(0.3, 1.0),
                                            rng.uniform(0.5, 1.3), rng.uniform(-1.0, 1.0));
      case 7:
      case 8:
        return GeneratingFunction::trig_pair(rng.signed_magnitude(0.3, 1.0),
                                             rng.signed_magnitude(0.3, 1.0),
                                             rng.uniform(0.5, 1.3), rng.uniform(-1.0, 1.0));
      case 9:
        if (options.allow_log_cos)
          return GeneratingFunction::log_cos(rng.signed_magnitude(0.8, 1.2));
        break;  // redraw
      default:
        if (options.allow_linear)
          return GeneratingFunction::linear(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        break;  // redraw
    }
  }
}

HypersurfaceSpec random_spec(Rng& rng, int n, Ambient ambient, const ProfileOptions& options) {
  AffineMap map = random_affine_map(rng, n);
  std::vector<GeneratingFunction> profiles;
  profiles.reserve(n);
  for (int i = 0; i < n; ++i) profiles.push_back(random_profile(rng, options));
  return HypersurfaceSpec(ambient, std::move(map), std::move(profiles));
}

std::vector<double> random_domain_point(Rng& rng, const HypersurfaceSpec& spec,
                                        double singular_margin, double box) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<double> x(spec.dim());
    for (auto& v : x) v = rng.uniform(-box, box);
    if (min_singular_distance(spec, x) >= singular_margin) return x;
  }
  fail(ErrorCode::InternalCheck, "failed to draw an in-domain point");
}

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace

FuzzSummary fuzz_suite(std::uint64_t seed, int trials) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "trials must be at least 1");

  FuzzSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  Rng rng(seed);

  auto record = [&summary](bool ok, int trial, const std::string& what) {
    ++summary.checks;
    if (ok) return;
    ++summary.failures;
    if (summary.messages.size() < 20)
      summary.messages.push_back("trial " + std::to_string(trial) + ": " + what);
  };

  auto run_trial = [&](int trial) {
    const int n = 2 + trial % 3;
    const HypersurfaceSpec spec = random_spec(rng, n, Ambient::Euclidean, {});
    const HypersurfaceSpec iso = spec.with_ambient(Ambient::Isotropic);

    for (int rep = 0; rep < 3; ++rep) {
      const std::vector<double> x = random_domain_point(rng, spec, 0.12);

      const auto [lhs, rhs] = det_hessian_identity(spec, x);
      record(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)), trial,
             "Hessian determinant identity");

      // FD noise floors: eval roundoff eps*scale divided by 2h (gradient) or
      // h^2 (second differences).
      const double scale = height_scale(spec, x);
      const double grad_floor = 1e-10 * scale;
      const double hess_floor = 1e-7 * scale;

      const HessianPair hp = hessian_at(spec, x);
      const std::vector<double> g = fd_gradient(spec, x);
      bool grad_ok = true;
      for (int i = 0; i < n; ++i)
        grad_ok = grad_ok && std::abs(hp.grad_x[i] - g[i]) <=
                                 1e-6 * (1.0 + std::abs(hp.grad_x[i])) + grad_floor;
      record(grad_ok, trial, "gradient vs finite differences");

      const SquareMatrix h = fd_hessian(spec, x);
      bool hess_ok = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          hess_ok = hess_ok && std::abs(hp.hess_x(i, j) - h(i, j)) <=
                                   1e-4 * (1.0 + std::abs(hp.hess_x(i, j))) + hess_floor;
      record(hess_ok, trial, "Hessian vs finite differences");

      const PrincipalSpectrum ps = principal_spectrum(iso, x);
      record(close(ps.k_funcs.front(), isotropic_mean(iso, x), 1e-10), trial,
             "K_1 vs isotropic mean");
      // The eigenvalue product inherits each eigenvalue's absolute error
      // (~eps*||H||) scaled by the product of the others; allow for that on
      // top of the relative bound, or extreme spectra raise false alarms.
      const double fro = hp.hess_x.frobenius_norm();
      double product_sensitivity = 0.0;
      for (int i = 0; i < n; ++i) {
        double partial = 1.0;
        for (int j = 0; j < n; ++j)
          if (j != i) partial *= std::abs(ps.kappas[j]);
        product_sensitivity += partial;
      }
      const double k_n = ps.k_funcs.back();
      const double rel = relative_curvature(iso, x);
      const double allowed = 1e-10 * (1.0 + std::max(std::abs(k_n), std::abs(rel))) +
                             64.0 * 2.22e-16 * fro * product_sensitivity;
      record(std::abs(k_n - rel) <= allowed, trial, "K_n vs relative curvature");
    }

    const GridSpec grid = GridSpec::uniform(n, -1.0, 1.0, 5, 1e-6);
    record(theorem_verdict(spec, TheoremId::CylinderFlatness, 0.0, grid).verdict !=
               Verdict::ViolatesTheorem,
           trial, "cylinder-flatness verdict");
    record(theorem_verdict(iso, TheoremId::ConstantRelativeCurvature, 0.0, grid).verdict !=
               Verdict::ViolatesTheorem,
           trial, "constant-relative-curvature verdict");
    record(theorem_verdict(iso, TheoremId::ConstantIsotropicMean, 0.0, grid).verdict !=
               Verdict::ViolatesTheorem,
           trial, "constant-isotropic-mean verdict");

    // A cylinder variant of the same spec must confirm the flatness statement.
    std::vector<GeneratingFunction> others(spec.profiles().begin() + 1, spec.profiles().end());
    const HypersurfaceSpec cylinder =
        construct_cylinder(spec.map(), 0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                           std::move(others), Ambient::Euclidean);
    record(theorem_verdict(cylinder, TheoremId::CylinderFlatness, 0.0, grid).verdict ==
               Verdict::ConfirmsTheorem,
           trial, "cylinder variant confirms flatness");
  };

  for (int trial = 0; trial < trials; ++trial) {
    try {
      run_trial(trial);
    } catch (const std::exception& e) {
      record(false, trial, std::string("unexpected exception: ") + e.what());
    }
  }
  return summary;
}

}  // namespace ahk
