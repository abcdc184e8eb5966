#pragma once

#include <span>
#include <vector>

namespace ahk {

/// Dense row-major square matrix. Dimensions here are tiny (n <= 8), so all
/// factorizations below are direct dense algorithms with partial pivoting.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0.0) {}

  static SquareMatrix identity(int n);

  int dim() const { return n_; }

  double& operator()(int i, int j) { return m_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return m_[static_cast<size_t>(i) * n_ + j]; }

  std::span<const double> flat() const { return m_; }

  SquareMatrix transposed() const;

  /// Matrix-vector product A*x; x.size() must equal dim().
  std::vector<double> apply(std::span<const double> x) const;

  SquareMatrix operator*(const SquareMatrix& rhs) const;

  double max_abs() const;
  double frobenius_norm() const;

 private:
  int n_ = 0;
  std::vector<double> m_;
};

/// Determinant by LU factorization with partial pivoting (destroys the copy).
double lu_determinant(SquareMatrix a);

/// Hadamard bound: product of the row 2-norms. Bounds |det| and sets the
/// natural scale of determinant roundoff for graded matrices.
double hadamard_bound(const SquareMatrix& a);

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws
/// Error(SingularMatrix) when a pivot falls below `pivot_floor`.
SquareMatrix inverse_of(const SquareMatrix& a, double pivot_floor = 1e-14);

struct SymmetricEigen {
  std::vector<double> values;  // unordered
  SquareMatrix vectors;        // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi sweeps for a symmetric matrix. Iterates until the
/// off-diagonal Frobenius norm drops below tol*(1 + ||A||_F) or `max_sweeps`
/// sweeps have run.
SymmetricEigen jacobi_eigen(SquareMatrix a, double tol = 1e-13, int max_sweeps = 30);

}  // namespace ahk
