#include "core/affine_map.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ahk {

namespace {

bool all_finite(const SquareMatrix& m) {
  for (double v : m.flat())
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

AffineMap::AffineMap(SquareMatrix entries) : entries_(std::move(entries)) {
  const int n = entries_.dim();
  if (n < 2) fail(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
  if (n > kMaxDim) fail(ErrorCode::DimensionTooLarge, "dimension must be at most 8");
  if (!all_finite(entries_))
    fail(ErrorCode::InvalidArgument, "matrix entries must be finite");

  det_ = lu_determinant(entries_);
  if (std::abs(det_) <= kMinAbsDet)
    fail(ErrorCode::SingularMatrix, "matrix determinant is below 1e-12");
  inverse_ = inverse_of(entries_);

  // A * A^{-1} must reproduce the identity; anything worse means the matrix
  // is too ill-conditioned to trust at these tolerances.
  SquareMatrix check = entries_ * inverse_;
  for (int i = 0; i < n; ++i) check(i, i) -= 1.0;
  if (check.max_abs() > 1e-10)
    fail(ErrorCode::SingularMatrix, "matrix inverse fails the identity check (ill-conditioned)");

  SquareMatrix gram = entries_ * entries_.transposed();
  for (int i = 0; i < n; ++i) gram(i, i) -= 1.0;
  is_orthogonal_ = gram.max_abs() < 1e-10;

  row_norm_sq_.resize(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += entries_(i, j) * entries_(i, j);
    row_norm_sq_[i] = s;
  }
}

AffineMap AffineMap::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 2) fail(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
  if (n > kMaxDim) fail(ErrorCode::DimensionTooLarge, "dimension must be at most 8");
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      fail(ErrorCode::DimensionMismatch, "matrix rows must all have length n");
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return AffineMap(std::move(m));
}

AffineMap AffineMap::from_flat(int n, std::span<const double> entries) {
  if (n < 2) fail(ErrorCode::DimensionTooSmall, "dimension must be at least 2");
  if (n > kMaxDim) fail(ErrorCode::DimensionTooLarge, "dimension must be at most 8");
  if (static_cast<int>(entries.size()) != n * n)
    fail(ErrorCode::DimensionMismatch, "expected n*n matrix entries");
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entries[static_cast<size_t>(i) * n + j];
  return AffineMap(std::move(m));
}

AffineMap AffineMap::identity(int n) { return AffineMap(SquareMatrix::identity(n)); }

std::vector<double> AffineMap::pullback(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim())
    fail(ErrorCode::DimensionMismatch, "point length does not match map dimension");
  return entries_.apply(x);
}

std::vector<double> AffineMap::push_forward(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != dim())
    fail(ErrorCode::DimensionMismatch, "point length does not match map dimension");
  return inverse_.apply(y);
}

AffineMap make_affine_map(const std::vector<std::vector<double>>& entries) {
  return AffineMap::from_rows(entries);
}

}  // namespace ahk
