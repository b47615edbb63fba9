#include "ssr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

void check_pair(const ClusterLabels& pred, const ClusterLabels& truth) {
  if (pred.size() != truth.size()) {
    throw ValidationError("label vectors differ in length (" +
                          std::to_string(pred.size()) + " vs " +
                          std::to_string(truth.size()) + ")");
  }
  pred.validate();
  truth.validate();
}

double entropy(const Vector& counts, double n) {
  double h = 0.0;
  for (Index i = 0; i < counts.size(); ++i) {
    if (counts(i) > 0.0) {
      const double p = counts(i) / n;
      h -= p * std::log(p);
    }
  }
  return h;
}

double choose2(double m) { return 0.5 * m * (m - 1.0); }

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<size_t> order(v.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

Assignment hungarian(const Matrix& cost) {
  if (cost.rows() != cost.cols()) throw ValidationError("hungarian: cost must be square");
  if (!cost.allFinite()) throw ValidationError("hungarian: cost has non-finite entries");
  const Index k = cost.rows();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based shortest augmenting path formulation; column 0 is a sentinel.
  std::vector<double> u(static_cast<size_t>(k + 1), 0.0);
  std::vector<double> v(static_cast<size_t>(k + 1), 0.0);
  std::vector<Index> row_of_col(static_cast<size_t>(k + 1), 0);
  std::vector<Index> way(static_cast<size_t>(k + 1), 0);
  for (Index i = 1; i <= k; ++i) {
    row_of_col[0] = i;
    Index j0 = 0;
    std::vector<double> minv(static_cast<size_t>(k + 1), kInf);
    std::vector<bool> used(static_cast<size_t>(k + 1), false);
    do {
      used[static_cast<size_t>(j0)] = true;
      const Index i0 = row_of_col[static_cast<size_t>(j0)];
      double delta = kInf;
      Index j1 = 0;
      for (Index j = 1; j <= k; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<size_t>(i0)] -
                           v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      for (Index j = 0; j <= k; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(row_of_col[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[static_cast<size_t>(j0)] != 0);
    do {
      const Index j1 = way[static_cast<size_t>(j0)];
      row_of_col[static_cast<size_t>(j0)] = row_of_col[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.column_of_row.assign(static_cast<size_t>(k), -1);
  for (Index j = 1; j <= k; ++j) {
    const Index row = row_of_col[static_cast<size_t>(j)];
    out.column_of_row[static_cast<size_t>(row - 1)] = static_cast<int>(j - 1);
    out.cost += cost(row - 1, j - 1);
  }
  return out;
}

ContingencyTable contingency(const ClusterLabels& pred, const ClusterLabels& truth) {
  check_pair(pred, truth);
  ContingencyTable t;
  t.n = pred.size();
  t.counts = Matrix::Zero(pred.k, truth.k);
  for (size_t i = 0; i < pred.labels.size(); ++i) {
    t.counts(pred.labels[i], truth.labels[i]) += 1.0;
  }
  return t;
}

double accuracy(const ClusterLabels& pred, const ClusterLabels& truth) {
  const ContingencyTable t = contingency(pred, truth);
  if (t.n == 0) return 1.0;
  const Index m = std::max(t.counts.rows(), t.counts.cols());
  Matrix cost = Matrix::Zero(m, m);
  cost.topLeftCorner(t.counts.rows(), t.counts.cols()) = -t.counts;
  return -hungarian(cost).cost / static_cast<double>(t.n);
}

double nmi(const ClusterLabels& pred, const ClusterLabels& truth) {
  const ContingencyTable t = contingency(pred, truth);
  const double n = static_cast<double>(t.n);
  const Vector a = t.counts.rowwise().sum();
  const Vector b = t.counts.colwise().sum().transpose();
  const double ha = entropy(a, n);
  const double hb = entropy(b, n);
  if (ha == 0.0 || hb == 0.0) return (ha == 0.0 && hb == 0.0) ? 1.0 : 0.0;
  double mi = 0.0;
  for (Index i = 0; i < t.counts.rows(); ++i) {
    for (Index j = 0; j < t.counts.cols(); ++j) {
      const double c = t.counts(i, j);
      if (c > 0.0) mi += (c / n) * std::log(c * n / (a(i) * b(j)));
    }
  }
  return std::clamp(mi / std::sqrt(ha * hb), 0.0, 1.0);
}

double rand_index(const ClusterLabels& pred, const ClusterLabels& truth) {
  const ContingencyTable t = contingency(pred, truth);
  if (t.n < 2) throw ValidationError("rand_index: needs at least two samples");
  const double pairs = choose2(static_cast<double>(t.n));
  double same_both = 0.0;
  for (Index i = 0; i < t.counts.size(); ++i) same_both += choose2(t.counts.data()[i]);
  double same_pred = 0.0;
  const Vector a = t.counts.rowwise().sum();
  for (Index i = 0; i < a.size(); ++i) same_pred += choose2(a(i));
  double same_truth = 0.0;
  const Vector b = t.counts.colwise().sum().transpose();
  for (Index j = 0; j < b.size(); ++j) same_truth += choose2(b(j));
  const double apart_both = pairs - same_pred - same_truth + same_both;
  return (same_both + apart_both) / pairs;
}

double within_class_ratio(const Matrix& x, const ClusterLabels& truth) {
  validate_data(x, "within_class_ratio input");
  if (truth.size() != x.cols()) {
    throw ValidationError("within_class_ratio: label count differs from sample count");
  }
  const double total = (x.colwise() - x.rowwise().mean()).squaredNorm();
  if (total == 0.0) throw ValidationError("within_class_ratio: zero total scatter");
  return kmeans_objective(x, truth) / total;
}

double rotation_recovery_score(const RotationMatrix& r_hat,
                               const RotationMatrix& r_true) {
  if (r_hat.rows() != r_true.rows() || r_hat.cols() != r_true.cols() ||
      r_hat.rows() != r_hat.cols()) {
    throw ValidationError("rotation_recovery_score: shapes differ");
  }
  const Matrix cosines = (r_hat.transpose() * r_true).cwiseAbs();
  const Assignment match = hungarian(-cosines);
  return -match.cost / static_cast<double>(r_hat.cols());
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ValidationError("spearman: lengths differ");
  if (x.size() < 2) throw ValidationError("spearman: needs at least two points");
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double m = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / m;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / m;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace ssr
