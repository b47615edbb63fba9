#include "ssr/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "ssr/errors.hpp"
#include "ssr/parallel.hpp"
#include "ssr/ssr.hpp"

namespace ssr {

void ClusterLabels::validate() const {
  if (k < 1) throw ValidationError("cluster labels: K must be at least 1");
  for (int label : labels) {
    if (label < 0 || label >= k) {
      throw ValidationError("cluster labels: label " + std::to_string(label) +
                            " outside [0, " + std::to_string(k) + ")");
    }
  }
}

ClusterLabels ClusterLabels::from_vector(std::vector<int> labels) {
  ClusterLabels out;
  out.k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  out.labels = std::move(labels);
  out.validate();
  return out;
}

ClusterLabels scut(const Matrix& h) {
  if (h.rows() < 1) throw ValidationError("scut: codes have no rows");
  ClusterLabels out;
  out.k = static_cast<int>(h.rows());
  out.labels.resize(static_cast<size_t>(h.cols()));
  for (Index j = 0; j < h.cols(); ++j) {
    Index best = 0;
    for (Index i = 1; i < h.rows(); ++i) {
      if (h(i, j) > h(best, j)) best = i;
    }
    out.labels[static_cast<size_t>(j)] = static_cast<int>(best);
  }
  return out;
}

namespace {

Matrix cluster_means(const DataMatrix& a, const std::vector<int>& labels, int k,
                     const Matrix& fallback) {
  Matrix sums = Matrix::Zero(a.rows(), k);
  std::vector<Index> counts(static_cast<size_t>(k), 0);
  for (Index j = 0; j < a.cols(); ++j) {
    const int c = labels[static_cast<size_t>(j)];
    sums.col(c) += a.col(j);
    ++counts[static_cast<size_t>(c)];
  }
  for (int c = 0; c < k; ++c) {
    const Index count = counts[static_cast<size_t>(c)];
    sums.col(c) = count > 0 ? Vector(sums.col(c) / static_cast<double>(count))
                            : Vector(fallback.col(c));
  }
  return sums;
}

struct LloydRun {
  std::vector<int> labels;
  Matrix centers;
  double objective = 0.0;
  int iterations = 0;
  std::vector<double> trace;
};

LloydRun lloyd(const DataMatrix& a, int k, int max_iter, std::uint64_t seed) {
  const Index n = a.cols();
  std::mt19937_64 rng(seed);
  std::vector<Index> pick(static_cast<size_t>(n));
  std::iota(pick.begin(), pick.end(), Index{0});
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<Index> dist(i, n - 1);
    std::swap(pick[static_cast<size_t>(i)], pick[static_cast<size_t>(dist(rng))]);
  }

  LloydRun run;
  run.centers.resize(a.rows(), k);
  for (int c = 0; c < k; ++c) run.centers.col(c) = a.col(pick[static_cast<size_t>(c)]);
  run.labels.assign(static_cast<size_t>(n), -1);
  Vector dist_to_center(n);

  for (int it = 1; it <= max_iter; ++it) {
    run.iterations = it;
    bool changed = false;
    double objective = 0.0;
    for (Index j = 0; j < n; ++j) {
      int best = 0;
      double best_d = (a.col(j) - run.centers.col(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (a.col(j) - run.centers.col(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      int& label = run.labels[static_cast<size_t>(j)];
      if (label != best) {
        label = best;
        changed = true;
      }
      dist_to_center(j) = best_d;
      objective += best_d;
    }
    run.trace.push_back(objective);
    if (!changed) break;

    std::vector<Index> counts(static_cast<size_t>(k), 0);
    for (int label : run.labels) ++counts[static_cast<size_t>(label)];
    Matrix next = cluster_means(a, run.labels, k, run.centers);
    // Empty cluster: move its centre onto the point farthest from its own.
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<size_t>(c)] > 0) continue;
      Index far = 0;
      dist_to_center.maxCoeff(&far);
      next.col(c) = a.col(far);
      dist_to_center(far) = -1.0;
    }
    run.centers = std::move(next);
  }

  run.centers = cluster_means(a, run.labels, k, run.centers);
  run.objective = 0.0;
  for (Index j = 0; j < n; ++j) {
    run.objective +=
        (a.col(j) - run.centers.col(run.labels[static_cast<size_t>(j)])).squaredNorm();
  }
  return run;
}

}  // namespace

double kmeans_objective(const DataMatrix& a, const ClusterLabels& labels) {
  if (labels.size() != a.cols()) {
    throw ValidationError("kmeans_objective: label count differs from sample count");
  }
  labels.validate();
  const Matrix means =
      cluster_means(a, labels.labels, labels.k, Matrix::Zero(a.rows(), labels.k));
  double total = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    total += (a.col(j) - means.col(labels.labels[static_cast<size_t>(j)])).squaredNorm();
  }
  return total;
}

KmeansResult kmeans(const DataMatrix& a, int k, const KmeansOptions& options) {
  validate_data(a, "kmeans input");
  if (k < 1 || k > a.cols()) {
    throw ValidationError("kmeans: K must satisfy 1 <= K <= n");
  }
  if (options.restarts < 1) throw ValidationError("kmeans: restarts must be >= 1");
  if (options.max_iter < 1) throw ValidationError("kmeans: max_iter must be >= 1");

  std::vector<LloydRun> runs(static_cast<size_t>(options.restarts));
  parallel_for(runs.size(), [&](size_t i) {
    runs[i] = lloyd(a, k, options.max_iter, derive_seed(options.seed, i));
  });

  size_t best = 0;
  for (size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].objective < runs[best].objective) best = i;
  }
  KmeansResult out;
  out.labels.k = k;
  out.labels.labels = runs[best].labels;
  out.centers = runs[best].centers;
  out.objective = runs[best].objective;
  out.iterations = runs[best].iterations;
  for (auto& run : runs) out.traces.push_back(std::move(run.trace));
  return out;
}

ClusterLabels rcut_pipeline(const SimilarityMatrix& w, int k,
                            const KmeansOptions& options) {
  if (k < 1 || k > w.size()) {
    throw ValidationError("rcut: K must satisfy 1 <= K <= n");
  }
  return rcut_from_eigen(sym_eig(laplacian(w).l, k, Spectrum::kSmallest), k, options);
}

ClusterLabels rcut_from_eigen(const EigenBasis& eigen, int k,
                              const KmeansOptions& options) {
  if (k < 1 || k > eigen.vectors.rows()) {
    throw ValidationError("rcut: K exceeds the number of supplied eigenvectors");
  }
  return kmeans(eigen.vectors.topRows(k), k, options).labels;
}

ClusterLabels linear_pipeline(const DataMatrix& a, int k, LinearPipeline variant,
                              const KmeansOptions& options) {
  validate_data(a, "linear pipeline input");
  if (k < 2 || k > a.cols()) {
    throw ValidationError("linear pipeline: K must satisfy 2 <= K <= n");
  }
  const SvdFactors f = compact_svd(center_columns(a));
  if (k - 1 > f.rank()) {
    throw ValidationError("linear pipeline: K - 1 exceeds rank(A)");
  }
  Matrix features = f.v.topRows(k - 1);
  if (variant == LinearPipeline::kKpc) {
    features = f.s.head(k - 1).asDiagonal() * features;
  }
  return kmeans(features, k, options).labels;
}

}  // namespace ssr
