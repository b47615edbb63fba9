#pragma once

// Seeded experiment drivers shared by the CLI and the acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "ssr/data.hpp"
#include "ssr/nscrt.hpp"

namespace ssr {

struct RecoverySweepConfig {
  std::vector<SizeProfile> profiles = {SizeProfile::kUniform,
                                       SizeProfile::kExponential};
  Index uniform_r = 16;
  Index exponential_r = 9;
  Index n = 1024;
  std::vector<double> noise_levels = {1.0 / 32, 1.0 / 16, 1.0 / 8, 1.0 / 4};
  int trials = 20;
  std::uint64_t seed = 0;
  NscrtOptions nscrt;
};

struct RecoveryRow {
  std::string profile;
  Index r = 0;
  double noise_a = 0.0;
  std::string method = "nscrt";
  double mean_score = 0.0;
  double std = 0.0;  ///< sample standard deviation over trials
};

/// One row per (profile, noise level), in grid order. Each trial draws
/// X = R (H* + E), orthonormalises its rows (polar factor, which keeps R) and
/// scores the NSCrt rotation against R.
std::vector<RecoveryRow> recovery_sweep(const RecoverySweepConfig& config);

/// Single trial of the recovery experiment.
double recovery_trial(const RecoveryInstanceSpec& spec, const NscrtOptions& options);

struct RhoSweepConfig {
  std::vector<double> separations = {1.0, 1.5, 2.0, 2.5, 3.0,
                                     3.5, 4.0, 5.0, 6.0, 8.0};
  Index per_cluster = 50;
  Index knn = 4;
  int trials = 50;
  std::uint64_t seed = 0;
};

struct RhoSweepRow {
  double separation = 0.0;
  double rho = 0.0;
  double mean_sparsity = 0.0;
  double scut_accuracy = 0.0;
};

struct RhoTrial {
  double rho = 0.0;
  double mean_sparsity = 0.0;
  double scut_accuracy = 0.0;
};

/// Three-cluster Gaussian-triangle data at one separation: kNN graph, rho, SSRk + Scut.
RhoTrial rho_trial(double separation, const RhoSweepConfig& config,
                   std::uint64_t seed);

/// Means over trials, one row per separation in the given order.
std::vector<RhoSweepRow> rho_sweep(const RhoSweepConfig& config);

std::string profile_name(SizeProfile p);
SizeProfile parse_profile(const std::string& name);

}  // namespace ssr
