#pragma once

// Dense linear-algebra kernels: symmetric eigendecomposition (cyclic Jacobi),
// compact SVD (one-sided Jacobi) and the orthogonal Procrustes solve.

#include <Eigen/Dense>

namespace ssr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense p x n data matrix; column i is sample i.
using DataMatrix = Matrix;

/// Square orthogonal matrix (R^T R = I). Reflections are admissible.
using RotationMatrix = Matrix;

enum class Spectrum { kSmallest, kLargest };

/// Selected eigenpairs of a symmetric matrix.
struct EigenBasis {
  Matrix vectors;  ///< r x n, one eigenvector per row
  Vector values;   ///< length r, ascending
  Index source_dim = 0;
};

/// Compact SVD A = U diag(S) V with m = min(p, n).
struct SvdFactors {
  Matrix u;  ///< p x m, orthonormal columns
  Vector s;  ///< length m, descending
  Matrix v;  ///< m x n, orthonormal rows

  Index rank(double rel_tol = -1.0) const;
};

/// Throws ValidationError unless the matrix is non-empty with finite entries.
void validate_data(const Matrix& a, const char* what = "data matrix");

/// r smallest (or largest) eigenpairs of a symmetric matrix via cyclic
/// Jacobi. Eigenvectors have their largest-magnitude entry positive.
EigenBasis sym_eig(const Matrix& m, Index r,
                   Spectrum which = Spectrum::kSmallest);

/// Full spectrum, ascending.
inline EigenBasis sym_eig_full(const Matrix& m) {
  return sym_eig(m, m.rows());
}

/// Compact SVD by one-sided (Hestenes) Jacobi. Singular directions with a
/// zero singular value are completed to an orthonormal set.
SvdFactors compact_svd(const Matrix& a);

/// argmax_R trace(R^T X Hbar^T) over orthogonal R, i.e. R = U V where
/// X Hbar^T = U diag(S) V.
RotationMatrix procrustes_rotation(const Matrix& x, const Matrix& hbar);

/// Nearest matrix with orthonormal rows (polar factor U V of X = U S V).
Matrix orthonormalize_rows(const Matrix& x);

/// max_ij |(X X^T - I)_ij|
double row_orthonormality_error(const Matrix& x);

}  // namespace ssr
