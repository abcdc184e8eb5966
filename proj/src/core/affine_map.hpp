#pragma once

#include <span>
#include <vector>

#include "core/matrix.hpp"

namespace ahk {

/// Invertible change of base coordinates y = A*x. The inverse, determinant,
/// row norms and orthogonality flag are computed once at construction; the
/// object is immutable afterwards.
///
/// Orthogonal maps are accepted (they describe ordinary translation
/// hypersurfaces); `is_orthogonal()` records which regime a map is in.
class AffineMap {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr double kMinAbsDet = 1e-12;

  /// Builds the map from row vectors. Throws Error(DimensionTooSmall/
  /// DimensionTooLarge) for n outside [2, 8], Error(DimensionMismatch) for
  /// ragged input and Error(SingularMatrix) when |det| <= 1e-12.
  static AffineMap from_rows(const std::vector<std::vector<double>>& rows);

  /// Same, from a row-major flat buffer of n*n entries.
  static AffineMap from_flat(int n, std::span<const double> entries);

  static AffineMap identity(int n);

  int dim() const { return entries_.dim(); }
  const SquareMatrix& entries() const { return entries_; }
  const SquareMatrix& inverse() const { return inverse_; }
  double det() const { return det_; }
  bool is_orthogonal() const { return is_orthogonal_; }

  /// Sum of squared entries of row i.
  double row_norm_sq(int i) const { return row_norm_sq_[i]; }

  /// y = A*x.
  std::vector<double> pullback(std::span<const double> x) const;
  /// x = A^{-1}*y.
  std::vector<double> push_forward(std::span<const double> y) const;

 private:
  explicit AffineMap(SquareMatrix entries);

  SquareMatrix entries_;
  SquareMatrix inverse_;
  double det_ = 0.0;
  bool is_orthogonal_ = false;
  std::vector<double> row_norm_sq_;
};

/// Operation-style alias for AffineMap::from_rows.
AffineMap make_affine_map(const std::vector<std::vector<double>>& entries);

}  // namespace ahk
