#pragma once

// Synthetic generators and dataset I/O.
//
// CSV files hold one sample per row (comma separated, optional trailing label
// column, lines starting with '#' ignored). Edge lists hold "i j [w]" per
// line; a comment containing "one-based" switches to 1-based node ids.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssr/cluster.hpp"
#include "ssr/graph.hpp"

namespace ssr {

struct GaussianComponent {
  Vector center;
  double scale = 1.0;  ///< isotropic standard deviation
  Index count = 1;
};

struct GaussianMixtureSpec {
  std::vector<GaussianComponent> components;
  std::uint64_t seed = 0;
};

struct LabeledData {
  DataMatrix points;  ///< p x n
  ClusterLabels labels;
  std::vector<std::string> label_names;
};

enum class SizeProfile { kUniform, kExponential };

struct RecoveryInstanceSpec {
  Index r = 2;
  Index n = 1024;
  SizeProfile profile = SizeProfile::kUniform;
  double noise_a = 0.0;
  std::uint64_t seed = 0;
};

struct RecoveryInstance {
  Matrix x;                ///< R (H* + E)
  RotationMatrix r_true;
  Matrix h_star;           ///< normalized indicator, entries 1/sqrt(n_k)
  std::vector<Index> sizes;
  double noise_sigma = 0.0;
};

LabeledData gen_gaussian_mixture(const GaussianMixtureSpec& spec);

/// Three unit-variance 2-D Gaussians of 50 points on an equilateral
/// triangle with side 8 ("g1"), 4 ("g2") or 2.5 ("g3").
GaussianMixtureSpec gaussian_preset(const std::string& name, std::uint64_t seed);

/// Triangle side length used by the presets.
double gaussian_preset_separation(const std::string& name);

/// Three-way equilateral Gaussian mixture with the given side length.
GaussianMixtureSpec gaussian_triangle(double side, Index per_cluster,
                                      std::uint64_t seed);

/// Unbalanced 2-D classes of sizes 5, 20 and 50: a central blob inside two
/// concentric rings.
LabeledData gen_onion(std::uint64_t seed);

/// Cluster sizes for a recovery profile: n/r each, or 2^k for k = 1..r-1
/// with the remainder in the last cluster.
std::vector<Index> recovery_cluster_sizes(SizeProfile profile, Index r, Index n);

/// Normalized indicator for consecutive blocks of the given sizes.
Matrix normalized_indicator(const std::vector<Index>& sizes);

/// Haar-random orthogonal matrix with determinant +1.
RotationMatrix random_rotation(Index r, std::uint64_t seed);

RecoveryInstance gen_recovery_instance(const RecoveryInstanceSpec& spec);

/// Samples as rows on disk, columns in memory. Labels are re-indexed to
/// 0..K-1 in order of first appearance.
LabeledData load_csv(const std::string& path, bool has_labels);

/// Writes samples as rows with 17 significant digits; labels appended as a
/// final column when given.
void save_csv(const std::string& path, const DataMatrix& points,
              const std::optional<ClusterLabels>& labels = std::nullopt);

SimilarityMatrix load_edge_list(const std::string& path);

/// Directory holding bundled datasets (iris.csv).
std::string bundled_data_dir();

/// Bundled iris data: 4 x 150, three classes of 50.
LabeledData load_iris();

/// One label per line (integers or names), re-indexed like load_csv.
ClusterLabels load_labels(const std::string& path);

}  // namespace ssr
