#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core/hypersurface.hpp"

namespace ahk {

/// Rectangular sampling grid in the base coordinates. Points whose pulled-back
/// coordinates come within exclusion_radius of a profile singularity are
/// skipped (and counted) instead of evaluated.
struct GridSpec {
  std::vector<double> lo;
  std::vector<double> hi;
  int points_per_axis = 21;
  double exclusion_radius = 0.0;

  static GridSpec uniform(int n, double lo, double hi, int points_per_axis,
                          double exclusion_radius = 0.0);

  int dim() const { return static_cast<int>(lo.size()); }
};

enum class Quantity {
  GaussKronecker,     // Euclidean ambient only
  RelativeCurvature,  // isotropic ambient only
  IsotropicMean,      // isotropic ambient only
  PrincipalMax,       // largest eigenvalue of hess_x (isotropic)
  CurvatureFunction,  // K_i for a chosen index (isotropic)
  EigenResidual,      // |laplacian(z) - lambda*z| (isotropic)
};

/// A scan request: the quantity plus its parameters (1-based index for
/// CurvatureFunction, eigenvalue for EigenResidual).
struct QuantityRequest {
  Quantity quantity = Quantity::GaussKronecker;
  int ki_index = 1;
  double lambda = 0.0;
};

enum class Verdict { ConfirmsTheorem, ViolatesTheorem, NotApplicable };

/// Sampled statistics of one scalar quantity over a grid. is_constant holds
/// iff (max - min) <= tol*(1 + |mean|) at the configured constancy tolerance;
/// a ViolatesTheorem verdict is reserved for implementation bugs and fails
/// the test suite.
struct CurvatureReport {
  std::string quantity;
  long samples = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
  bool is_constant = false;
  std::optional<double> constant_value;
  long skipped = 0;
  Verdict verdict = Verdict::NotApplicable;
};

/// Verification tolerances, all multiplied by the AHK_TOLERANCE_SCALE
/// environment variable (default 1) so the whole policy can be tightened or
/// loosened with a single knob.
struct Tolerances {
  double constancy = 1e-8;       // is_constant window, relative to 1+|mean|
  double zero_mean = 1e-8;       // "the constant is zero" test
  double structure = 1e-9;       // coefficient product / rate identities
  double mean_sum = 1e-10;       // coefficient-sum identity for constant mean
  double eigen_residual = 1e-9;  // |lap z - lambda z| <= tol*(1+max|z|)
  double fd_cross_check = 1e-4;  // analytic vs finite-difference guards

  static Tolerances current();
};

/// Statements the verdict machinery can check. Named by their content; the
/// CLI exposes short aliases for each.
enum class TheoremId {
  CylinderFlatness,            // constant Gauss-Kronecker curvature => cylinder, K = 0
  ConstantRelativeCurvature,   // constant relative curvature => quadratic profiles
  ConstantIsotropicMean,       // constant isotropic mean => quadratic/linear profiles
  LaplacianEigenfunction,      // lap z = lambda z => exp/trig profiles
};

/// Evaluates the requested quantity at every non-excluded grid point and
/// reports order-independent statistics. Throws Error(AmbientMismatch) when
/// the quantity does not apply to the spec's ambient and Error(EmptyGrid)
/// when every point is excluded.
CurvatureReport scan(const HypersurfaceSpec& spec, const QuantityRequest& request,
                     const GridSpec& grid);

/// Scan plus the verdict for one theorem. Unmet hypotheses map to
/// NotApplicable; met hypotheses with failed conclusions map to
/// ViolatesTheorem. `lambda` is only read for LaplacianEigenfunction.
CurvatureReport theorem_verdict(const HypersurfaceSpec& spec, TheoremId theorem,
                                double lambda, const GridSpec& grid);

struct FuzzSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> messages;
};

/// Deterministic randomized property sweep: random specs, then the Hessian
/// determinant identity, analytic-vs-FD agreement, spectrum consistency and
/// the applicable theorem verdicts on each. Failures are collected, not
/// thrown.
FuzzSummary fuzz_suite(std::uint64_t seed, int trials);

/// Deterministic RNG used by fuzz_suite and the test corpora. The mappings to
/// doubles/ints are hand-rolled so that streams are identical across
/// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi_inclusive);
  bool coin(double p = 0.5);
  /// Uniform magnitude in [lo, hi] with a random sign.
  double signed_magnitude(double lo, double hi);

 private:
  std::mt19937_64 eng_;
};

struct ProfileOptions {
  bool allow_linear = false;
  bool allow_log_cos = true;
};

/// Random invertible map with entries in [-2, 2], |det| >= 0.1 and the
/// orthogonality flag false.
AffineMap random_affine_map(Rng& rng, int n);

GeneratingFunction random_profile(Rng& rng, const ProfileOptions& options);

HypersurfaceSpec random_spec(Rng& rng, int n, Ambient ambient, const ProfileOptions& options);

/// Uniform point in [-box, box]^n, rejection-sampled so every profile sits at
/// least `singular_margin` away from its nearest singularity.
std::vector<double> random_domain_point(Rng& rng, const HypersurfaceSpec& spec,
                                        double singular_margin, double box = 1.0);

namespace detail {

/// Iterates the grid in row-major order (axis 0 slowest). The callback
/// receives the point and whether it is excluded by the singularity radius.
void for_each_grid_point(const HypersurfaceSpec& spec, const GridSpec& grid,
                         const std::function<void(std::span<const double>, bool)>& visit);

/// Builds a report from samples accumulated in grid order.
CurvatureReport make_report(std::string quantity_name, const std::vector<double>& samples,
                            long skipped);

std::string quantity_name(const QuantityRequest& request);

/// Evaluates one quantity at one point (ambient already validated).
double evaluate_quantity(const HypersurfaceSpec& spec, const QuantityRequest& request,
                         std::span<const double> x);

/// Throws Error(AmbientMismatch) unless the quantity applies to the ambient.
void require_ambient(const HypersurfaceSpec& spec, const QuantityRequest& request);

}  // namespace detail

}  // namespace ahk
