#pragma once

#include <cmath>
#include <vector>

#include "core/affine_map.hpp"
#include "core/generating_function.hpp"
#include "core/hypersurface.hpp"

namespace ahk::test {

/// |a - b| <= tol * (1 + max(|a|, |b|)): relative with an absolute floor.
inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline GeneratingFunction quad(double c = 1.0, double d = 0.0, double e = 0.0) {
  return GeneratingFunction::quadratic(c, d, e);
}

inline GeneratingFunction lin(double c = 0.0, double d = 0.0) {
  return GeneratingFunction::linear(c, d);
}

inline HypersurfaceSpec identity_spec(std::vector<GeneratingFunction> profiles,
                                      Ambient ambient = Ambient::Euclidean) {
  const int n = static_cast<int>(profiles.size());
  return HypersurfaceSpec(ambient, AffineMap::identity(n), std::move(profiles));
}

inline HypersurfaceSpec spec_with_map(std::vector<std::vector<double>> rows,
                                      std::vector<GeneratingFunction> profiles,
                                      Ambient ambient = Ambient::Euclidean) {
  return HypersurfaceSpec(ambient, AffineMap::from_rows(rows), std::move(profiles));
}

}  // namespace ahk::test
