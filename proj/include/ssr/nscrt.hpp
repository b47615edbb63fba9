#pragma once

// Nonnegative sparse coding via rotation and truncation (NSCrt).
//
// Given X with orthonormal rows, alternately minimises
//   ||X - R Hbar||_F^2 + lambda^2 nnz(Hbar),  R^T R = I, Hbar >= 0
// starting from R = I: Hbar is the truncation of H = R^T X at lambda, and
// R is the Procrustes fit of X onto Hbar.

#include <vector>

#include "ssr/matrix_core.hpp"

namespace ssr {

struct NscrtOptions {
  /// Truncation threshold; values <= 0 select 0.6 / sqrt(n).
  double lambda = 0.0;
  int max_iter = 200;
  /// Stop when ||R_t - R_{t-1}||_F / sqrt(r) <= tol.
  double tol = 0.01;
};

struct SparseCodes {
  Matrix h;         ///< r x n, H = R^T X
  Matrix hbar;      ///< truncation of H at lambda
  RotationMatrix rotation;
  int iterations = 0;
  bool converged = false;
  double lambda = 0.0;
  /// Objective ||X - R Hbar||^2 + lambda^2 nnz(Hbar) after each truncation.
  std::vector<double> objective_trace;
};

double default_lambda(Index n);

/// Keeps H_ij when H_ij >= lambda, zero otherwise (negatives always zeroed).
Matrix truncate(const Matrix& h, double lambda);

double nscrt_objective(const Matrix& x, const RotationMatrix& r,
                       const Matrix& hbar, double lambda);

/// Throws ValidationError unless X X^T = I within 1e-6.
SparseCodes nscrt(const Matrix& x, const NscrtOptions& options = {});

}  // namespace ssr
