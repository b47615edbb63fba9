#pragma once

// Clustering front-ends: Scut (argmax of sparse codes), Lloyd K-means and
// the eigenvector + K-means pipelines used as baselines.

#include <cstdint>
#include <vector>

#include "ssr/graph.hpp"
#include "ssr/nscrt.hpp"

namespace ssr {

/// Labels in [0, k).
struct ClusterLabels {
  std::vector<int> labels;
  int k = 0;

  Index size() const { return static_cast<Index>(labels.size()); }
  /// Throws ValidationError if any label falls outside [0, k).
  void validate() const;
  /// Builds labels with k = max + 1.
  static ClusterLabels from_vector(std::vector<int> labels);
};

struct KmeansOptions {
  std::uint64_t seed = 0;
  int restarts = 20;
  int max_iter = 300;
};

struct KmeansResult {
  ClusterLabels labels;
  Matrix centers;  ///< p x K
  double objective = 0.0;
  int iterations = 0;
  /// Objective after every assignment step, one trace per restart.
  std::vector<std::vector<double>> traces;
};

ClusterLabels scut(const Matrix& h);
inline ClusterLabels scut(const SparseCodes& codes) { return scut(codes.h); }

/// Within-cluster sum of squares of `labels` against their own means.
double kmeans_objective(const DataMatrix& a, const ClusterLabels& labels);

KmeansResult kmeans(const DataMatrix& a, int k, const KmeansOptions& options = {});

/// K-means on the columns of the K smallest Laplacian eigenvectors.
ClusterLabels rcut_pipeline(const SimilarityMatrix& w, int k,
                            const KmeansOptions& options = {});

/// K-means on the first k rows of precomputed smallest eigenvectors.
ClusterLabels rcut_from_eigen(const EigenBasis& eigen, int k,
                              const KmeansOptions& options = {});

enum class LinearPipeline {
  kKpc,    ///< K-means on Sigma_{1:K-1} V_{1:K-1}
  kRcuto,  ///< K-means on V_{1:K-1}
};

/// Both variants centre the data first.
ClusterLabels linear_pipeline(const DataMatrix& a, int k, LinearPipeline variant,
                              const KmeansOptions& options = {});

}  // namespace ssr
