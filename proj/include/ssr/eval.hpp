#pragma once

// Label matching and clustering scores.

#include <vector>

#include "ssr/cluster.hpp"

namespace ssr {

struct ContingencyTable {
  Matrix counts;  ///< K_pred x K_true
  Index n = 0;
};

struct Assignment {
  std::vector<int> column_of_row;  ///< row i is matched to column_of_row[i]
  double cost = 0.0;
};

/// Minimum-cost perfect matching of a square cost matrix (Kuhn-Munkres with
/// potentials, O(K^3)).
Assignment hungarian(const Matrix& cost);

ContingencyTable contingency(const ClusterLabels& pred, const ClusterLabels& truth);

/// Fraction of samples correct under the best one-to-one label matching.
double accuracy(const ClusterLabels& pred, const ClusterLabels& truth);

/// I(pred; truth) / sqrt(H(pred) H(truth)) with natural logs. When an entropy
/// is zero: 1 if both partitions are the single all-in-one cluster, else 0.
double nmi(const ClusterLabels& pred, const ClusterLabels& truth);

/// Plain (unadjusted) Rand index.
double rand_index(const ClusterLabels& pred, const ClusterLabels& truth);

/// S_W / S_T: within-class scatter over total scatter of the columns of x.
double within_class_ratio(const Matrix& x, const ClusterLabels& truth);

/// (1/r) sum_k |R_hat_{pi(k)}^T R_k| with pi the matching that maximises the
/// total absolute cosine between columns.
double rotation_recovery_score(const RotationMatrix& r_hat,
                               const RotationMatrix& r_true);

/// Spearman rank correlation with average ranks for ties. Returns 0 when
/// either sequence is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ssr
