#include "ssr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

constexpr double kFlushBelow = 1e-300;
constexpr double kZeroEigenRelTol = 1e-12;

}  // namespace

SimilarityMatrix::SimilarityMatrix(Matrix w) : w_(std::move(w)) {
  validate_data(w_, "similarity matrix");
  if (w_.rows() != w_.cols()) {
    throw ValidationError("similarity matrix must be square");
  }
  const Index n = w_.rows();
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      double& x = w_(i, j);
      if (x < 0.0) {
        throw ValidationError("similarity matrix has a negative entry at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (x < kFlushBelow) x = 0.0;
    }
  }
  for (Index j = 0; j < n; ++j) {
    if (w_(j, j) != 0.0) {
      throw ValidationError("similarity matrix must have a zero diagonal");
    }
    for (Index i = 0; i < j; ++i) {
      if (w_(i, j) != w_(j, i)) {
        throw ValidationError("similarity matrix must be exactly symmetric");
      }
    }
  }
}

SimilarityMatrix build_knn_similarity(const DataMatrix& points, Index k,
                                      KnnSymmetrization mode) {
  validate_data(points, "points");
  const Index n = points.cols();
  if (k < 1) throw ValidationError("knn: k must be at least 1");
  if (k >= n) {
    throw ValidationError("knn: k = " + std::to_string(k) +
                          " must be smaller than the sample count " +
                          std::to_string(n));
  }

  Matrix dist(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i <= j; ++i) {
      const double d = (points.col(i) - points.col(j)).norm();
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }

  // neighbours[i] holds the k nearest points to i, ties broken by index.
  std::vector<std::vector<Index>> neighbours(static_cast<size_t>(n));
  Vector sigma(n);
  std::vector<Index> order(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), Index{0});
    order.erase(order.begin() + i);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](Index a, Index b) {
                        const double da = dist(i, a);
                        const double db = dist(i, b);
                        return da < db || (da == db && a < b);
                      });
    neighbours[static_cast<size_t>(i)].assign(order.begin(), order.begin() + k);
    sigma(i) = dist(i, order[static_cast<size_t>(k - 1)]);
    order.resize(static_cast<size_t>(n));
  }

  if ((sigma.array() == 0.0).any()) {
    double smallest = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < j; ++i) {
        if (dist(i, j) > 0.0) smallest = std::min(smallest, dist(i, j));
      }
    }
    if (!std::isfinite(smallest)) {
      throw ValidationError("knn: all points coincide; no scale can be set");
    }
    for (Index i = 0; i < n; ++i) {
      if (sigma(i) == 0.0) sigma(i) = smallest;
    }
  }

  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> adjacent =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
  for (Index i = 0; i < n; ++i) {
    for (Index j : neighbours[static_cast<size_t>(i)]) adjacent(i, j) = true;
  }

  Matrix w = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const bool keep = mode == KnnSymmetrization::kUnion
                            ? (adjacent(i, j) || adjacent(j, i))
                            : (adjacent(i, j) && adjacent(j, i));
      if (!keep) continue;
      const double d = dist(i, j);
      double value = std::exp(-d * d / (sigma(i) * sigma(j)));
      if (value < kFlushBelow) value = 0.0;
      w(i, j) = value;
      w(j, i) = value;
    }
  }
  return SimilarityMatrix(std::move(w));
}

LaplacianMatrix laplacian(const SimilarityMatrix& w) {
  LaplacianMatrix out;
  out.degrees = w.matrix().rowwise().sum();
  out.l = -w.matrix();
  out.l.diagonal() = out.degrees;
  return out;
}

Components connected_components(const SimilarityMatrix& w) {
  const Index n = w.size();
  Components out;
  out.labels.assign(static_cast<size_t>(n), -1);
  std::queue<Index> frontier;
  for (Index start = 0; start < n; ++start) {
    if (out.labels[static_cast<size_t>(start)] >= 0) continue;
    const int label = static_cast<int>(out.count++);
    out.labels[static_cast<size_t>(start)] = label;
    frontier.push(start);
    while (!frontier.empty()) {
      const Index i = frontier.front();
      frontier.pop();
      for (Index j = 0; j < n; ++j) {
        if (w(j, i) > 0.0 && out.labels[static_cast<size_t>(j)] < 0) {
          out.labels[static_cast<size_t>(j)] = label;
          frontier.push(j);
        }
      }
    }
  }
  return out;
}

RhoReport rho(const LaplacianMatrix& l, Index k) {
  const Index n = l.l.rows();
  if (k < 1 || k >= n) {
    throw ValidationError("rho: K must satisfy 1 <= K < n");
  }
  const EigenBasis eig = sym_eig(l.l, k + 1, Spectrum::kSmallest);
  return rho_from_spectrum(eig.values, k, l.l.norm());
}

RhoReport rho_from_spectrum(const Vector& ascending, Index k, double laplacian_norm) {
  if (k < 1 || ascending.size() < k + 1) {
    throw ValidationError("rho: need at least K + 1 eigenvalues");
  }
  const double zero_tol = kZeroEigenRelTol * laplacian_norm;
  auto clean = [&](double v) { return std::abs(v) <= zero_tol ? 0.0 : v; };

  RhoReport out;
  out.k = k;
  out.lambda_k = clean(ascending(k - 1));
  out.lambda_k_plus_1 = clean(ascending(k));
  if (out.lambda_k_plus_1 <= 0.0) {
    out.rho = 0.0;
  } else {
    out.rho = std::clamp(
        (out.lambda_k_plus_1 - out.lambda_k) / out.lambda_k_plus_1, 0.0, 1.0);
  }
  return out;
}

}  // namespace ssr
