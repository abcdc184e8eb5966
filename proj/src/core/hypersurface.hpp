#pragma once

#include <span>
#include <vector>

#include "core/affine_map.hpp"
#include "core/generating_function.hpp"

namespace ahk {

enum class Ambient { Euclidean, Isotropic };

/// A validated evaluation point in the base coordinates. Entries must be
/// finite.
struct EvalPoint {
  explicit EvalPoint(std::vector<double> coords);

  const std::vector<double>& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  operator std::span<const double>() const { return coords_; }

 private:
  std::vector<double> coords_;
};

/// An affine translation hypersurface: the graph z(x) = sum_i f_i(y_i) with
/// y = A*x. Immutable after construction.
class HypersurfaceSpec {
 public:
  HypersurfaceSpec(Ambient ambient, AffineMap map, std::vector<GeneratingFunction> profiles);

  int dim() const { return map_.dim(); }
  Ambient ambient() const { return ambient_; }
  const AffineMap& map() const { return map_; }
  const std::vector<GeneratingFunction>& profiles() const { return profiles_; }

  /// Copy of this spec reinterpreted in another ambient space (the point set
  /// is the same; only curvature semantics change).
  HypersurfaceSpec with_ambient(Ambient ambient) const;

  bool has_log_cos_profile() const;

 private:
  Ambient ambient_;
  AffineMap map_;
  std::vector<GeneratingFunction> profiles_;
};

/// y_i = sum_j a_ij x_j.
std::vector<double> pullback_coords(const AffineMap& map, std::span<const double> x);

/// z(x) = sum_i f_i(y_i). Throws Error(DomainSingularity) from profile guards.
double eval_height(const HypersurfaceSpec& spec, std::span<const double> x);

/// As eval_height, but first requires every profile to sit at least `margin`
/// away from its nearest singularity (used by finite-difference stencils so
/// they abort instead of returning cancellation noise).
double eval_height_guarded(const HypersurfaceSpec& spec, std::span<const double> x, double margin);

/// Smallest singular distance over all profiles at y = A*x; +infinity when no
/// profile has singularities.
double min_singular_distance(const HypersurfaceSpec& spec, std::span<const double> x);

/// 1 + sum_i |f_i(y_i)|: the magnitude of the terms entering eval_height and
/// hence the scale of its floating-point roundoff. Finite-difference
/// comparisons divide this by h or h^2 to bound their noise floors.
double height_scale(const HypersurfaceSpec& spec, std::span<const double> x);

}  // namespace ahk
