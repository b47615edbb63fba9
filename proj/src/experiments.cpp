#include "ssr/experiments.hpp"

#include <cmath>
#include <numeric>

#include "ssr/errors.hpp"
#include "ssr/eval.hpp"
#include "ssr/parallel.hpp"
#include "ssr/ssr.hpp"

namespace ssr {

std::string profile_name(SizeProfile p) {
  return p == SizeProfile::kUniform ? "uniform" : "exponential";
}

SizeProfile parse_profile(const std::string& name) {
  if (name == "uniform") return SizeProfile::kUniform;
  if (name == "exponential") return SizeProfile::kExponential;
  throw ValidationError("unknown size profile '" + name + "' (uniform, exponential)");
}

double recovery_trial(const RecoveryInstanceSpec& spec, const NscrtOptions& options) {
  const RecoveryInstance inst = gen_recovery_instance(spec);
  const SparseCodes codes = nscrt(orthonormalize_rows(inst.x), options);
  return rotation_recovery_score(codes.rotation, inst.r_true);
}

std::vector<RecoveryRow> recovery_sweep(const RecoverySweepConfig& config) {
  if (config.trials < 1) throw ValidationError("recovery sweep: trials must be >= 1");
  if (config.noise_levels.empty() || config.profiles.empty()) {
    throw ValidationError("recovery sweep: empty grid");
  }
  std::vector<RecoveryRow> rows;
  std::vector<RecoveryInstanceSpec> specs;
  for (SizeProfile profile : config.profiles) {
    for (double a : config.noise_levels) {
      RecoveryRow row;
      row.profile = profile_name(profile);
      row.r = profile == SizeProfile::kUniform ? config.uniform_r : config.exponential_r;
      row.noise_a = a;
      rows.push_back(row);
      RecoveryInstanceSpec spec;
      spec.r = row.r;
      spec.n = config.n;
      spec.profile = profile;
      spec.noise_a = a;
      specs.push_back(spec);
      recovery_cluster_sizes(profile, spec.r, spec.n);  // validates early
    }
  }

  const size_t trials = static_cast<size_t>(config.trials);
  std::vector<double> scores(rows.size() * trials);
  parallel_for(scores.size(), [&](size_t task) {
    const size_t cell = task / trials;
    RecoveryInstanceSpec spec = specs[cell];
    spec.seed = derive_seed(config.seed, task);
    scores[task] = recovery_trial(spec, config.nscrt);
  });

  for (size_t cell = 0; cell < rows.size(); ++cell) {
    const double* s = scores.data() + cell * trials;
    const double mean = std::accumulate(s, s + trials, 0.0) / static_cast<double>(trials);
    double ss = 0.0;
    for (size_t t = 0; t < trials; ++t) ss += (s[t] - mean) * (s[t] - mean);
    rows[cell].mean_score = mean;
    rows[cell].std = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1)) : 0.0;
  }
  return rows;
}

RhoTrial rho_trial(double separation, const RhoSweepConfig& config,
                   std::uint64_t seed) {
  const LabeledData data =
      gen_gaussian_mixture(gaussian_triangle(separation, config.per_cluster, seed));
  const SimilarityMatrix w = build_knn_similarity(data.points, config.knn);
  const LaplacianMatrix l = laplacian(w);
  constexpr Index k = 3;
  const EigenBasis eig = sym_eig(l.l, k + 1, Spectrum::kSmallest);

  RhoTrial out;
  out.rho = rho_from_spectrum(eig.values, k, l.l.norm()).rho;
  const SsrResult res = ssrk_from_eigen(eig, k);
  out.mean_sparsity = mean_sparsity(res.codes.h);
  out.scut_accuracy = accuracy(scut(res.codes), data.labels);
  return out;
}

std::vector<RhoSweepRow> rho_sweep(const RhoSweepConfig& config) {
  if (config.trials < 1) throw ValidationError("rho sweep: trials must be >= 1");
  if (config.separations.empty()) throw ValidationError("rho sweep: no separations");
  if (config.per_cluster < 1) {
    throw ValidationError("rho sweep: per-cluster count must be >= 1");
  }
  const size_t trials = static_cast<size_t>(config.trials);
  std::vector<RhoTrial> results(config.separations.size() * trials);
  parallel_for(results.size(), [&](size_t task) {
    results[task] = rho_trial(config.separations[task / trials], config,
                              derive_seed(config.seed, task));
  });

  std::vector<RhoSweepRow> rows;
  for (size_t p = 0; p < config.separations.size(); ++p) {
    RhoSweepRow row;
    row.separation = config.separations[p];
    for (size_t t = 0; t < trials; ++t) {
      const RhoTrial& r = results[p * trials + t];
      row.rho += r.rho;
      row.mean_sparsity += r.mean_sparsity;
      row.scut_accuracy += r.scut_accuracy;
    }
    const double m = static_cast<double>(trials);
    row.rho /= m;
    row.mean_sparsity /= m;
    row.scut_accuracy /= m;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ssr
