#pragma once

// Spectral sparse representation pipelines.
//
// The kernel variant rotates the r smallest Laplacian eigenvectors into
// sparse codes; the original-data variant rotates [1/sqrt(n) 1^T; V_{1:r-1}]
// taken from the SVD of centred data. Both share the NSCrt solver.

#include <optional>

#include "ssr/graph.hpp"
#include "ssr/nscrt.hpp"

namespace ssr {

enum class SsrVariant { kKernel, kOriginal };

struct SsrResult {
  SparseCodes codes;
  Matrix basis;  ///< the row-orthonormal matrix handed to NSCrt
  EigenBasis eigen;                  ///< kernel variant
  std::optional<SvdFactors> svd;     ///< original-data variant
  SsrVariant variant = SsrVariant::kKernel;
  Index r = 0;
  double lambda = 0.0;
};

struct Dictionary {
  Matrix atoms;  ///< one atom per column
};

SsrResult ssrk(const SimilarityMatrix& w, Index r, NscrtOptions options = {});

/// Kernel variant from precomputed smallest Laplacian eigenpairs; the first
/// r rows of `eigen` are used.
SsrResult ssrk_from_eigen(const EigenBasis& eigen, Index r, NscrtOptions options = {});

/// `a` must be mean-removed (||A 1|| <= 1e-8 ||A||_F); residual mean is
/// subtracted before the SVD.
SsrResult ssro(const DataMatrix& a, Index r, NscrtOptions options = {});

/// Subtracts the mean column.
DataMatrix center_columns(const DataMatrix& a);

/// diag(sqrt(lambda_n - lambda_i)) V from the full Laplacian spectrum, so
/// that A~^T A~ = lambda_n I - L.
Matrix virtual_data(const EigenBasis& full_spectrum);

/// D = source H^T.
Dictionary dictionary(const Matrix& source, const Matrix& h);

/// ||D^T D - c I||_F / (c sqrt(r)); near zero for near-ideal graphs with
/// c = lambda_n.
double dictionary_orthogonality_ratio(const Dictionary& d, double scale);

/// Largest |cos| between distinct atoms.
double mutual_coherence(const Dictionary& d);

/// H^T H; every column sums to one when 1/sqrt(n) 1^T lies in span(H).
Matrix code_gram(const Matrix& h);

/// max_j |(1^T H^T H)_j - 1|
double weight_sum_deviation(const Matrix& h);

/// ||x||_2 / ||x||_1, in [1/sqrt(n), 1].
double sparsity(const Eigen::Ref<const Vector>& x);

/// Mean sparsity over the nonzero columns. A column is zero when its sample
/// lies in a graph component not represented among the r eigenvectors.
double mean_sparsity(const Matrix& h);

/// W = beta 1 1^T + A^T A with beta = -min(A^T A), diagonal zeroed; the
/// linear-kernel graph whose Laplacian matches the original-data variant.
SimilarityMatrix linear_kernel_similarity(const DataMatrix& a);

}  // namespace ssr
