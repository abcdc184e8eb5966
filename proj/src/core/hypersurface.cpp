#include "core/hypersurface.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace ahk {

EvalPoint::EvalPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double v : coords_)
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "point coordinates must be finite");
}

HypersurfaceSpec::HypersurfaceSpec(Ambient ambient, AffineMap map,
                                   std::vector<GeneratingFunction> profiles)
    : ambient_(ambient), map_(std::move(map)), profiles_(std::move(profiles)) {
  if (static_cast<int>(profiles_.size()) != map_.dim())
    fail(ErrorCode::DimensionMismatch, "need exactly one profile per dimension");
}

HypersurfaceSpec HypersurfaceSpec::with_ambient(Ambient ambient) const {
  return HypersurfaceSpec(ambient, map_, profiles_);
}

bool HypersurfaceSpec::has_log_cos_profile() const {
  for (const auto& f : profiles_)
    if (f.kind() == GeneratingFunction::Kind::LogCos) return true;
  return false;
}

std::vector<double> pullback_coords(const AffineMap& map, std::span<const double> x) {
  return map.pullback(x);
}

double eval_height(const HypersurfaceSpec& spec, std::span<const double> x) {
  const std::vector<double> y = spec.map().pullback(x);
  double z = 0.0;
  for (int i = 0; i < spec.dim(); ++i) z += spec.profiles()[i](y[i]);
  return z;
}

double eval_height_guarded(const HypersurfaceSpec& spec, std::span<const double> x, double margin) {
  const std::vector<double> y = spec.map().pullback(x);
  double z = 0.0;
  for (int i = 0; i < spec.dim(); ++i) {
    if (spec.profiles()[i].singular_distance(y[i]) < margin)
      fail(ErrorCode::DomainSingularity, "stencil point too close to a profile singularity");
    z += spec.profiles()[i](y[i]);
  }
  return z;
}

double min_singular_distance(const HypersurfaceSpec& spec, std::span<const double> x) {
  const std::vector<double> y = spec.map().pullback(x);
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spec.dim(); ++i)
    d = std::min(d, spec.profiles()[i].singular_distance(y[i]));
  return d;
}

double height_scale(const HypersurfaceSpec& spec, std::span<const double> x) {
  const std::vector<double> y = spec.map().pullback(x);
  double scale = 1.0;
  for (int i = 0; i < spec.dim(); ++i) scale += std::abs(spec.profiles()[i](y[i]));
  return scale;
}

}  // namespace ahk
