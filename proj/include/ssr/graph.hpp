#pragma once

// Similarity graphs: self-tuning kNN construction, Laplacian assembly,
// connected components and the rho eigengap measure.

#include <vector>

#include "ssr/matrix_core.hpp"

namespace ssr {

/// Symmetric, nonnegative, zero-diagonal n x n affinity matrix.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;

  /// Validates and adopts `w`. Entries below 1e-300 are flushed to zero.
  explicit SimilarityMatrix(Matrix w);

  const Matrix& matrix() const { return w_; }
  Index size() const { return w_.rows(); }
  double operator()(Index i, Index j) const { return w_(i, j); }

 private:
  Matrix w_;
};

struct LaplacianMatrix {
  Matrix l;        ///< diag(s) - W
  Vector degrees;  ///< s_i = sum_j W_ij
};

struct Components {
  Index count = 0;
  std::vector<int> labels;  ///< numbered in order of first appearance
};

/// rho = (lambda_{K+1} - lambda_K) / lambda_{K+1}; 0 when lambda_{K+1} = 0.
struct RhoReport {
  double rho = 0.0;
  double lambda_k = 0.0;
  double lambda_k_plus_1 = 0.0;
  Index k = 0;
};

enum class KnnSymmetrization { kUnion, kMutual };

/// Self-tuning kNN affinity W_ij = exp(-d_ij^2 / (sigma_i sigma_j)), where
/// sigma_i is the distance from point i to its k-th nearest neighbour.
SimilarityMatrix build_knn_similarity(
    const DataMatrix& points, Index k,
    KnnSymmetrization mode = KnnSymmetrization::kUnion);

LaplacianMatrix laplacian(const SimilarityMatrix& w);

/// Components of the graph with edges W_ij > 0.
Components connected_components(const SimilarityMatrix& w);

RhoReport rho(const LaplacianMatrix& l, Index k);

/// rho from the ascending eigenvalues of a Laplacian (at least k + 1 of
/// them); eigenvalues within 1e-12 * laplacian_norm of zero count as zero.
RhoReport rho_from_spectrum(const Vector& ascending, Index k, double laplacian_norm);

}  // namespace ssr
