#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssr/cluster.hpp"
#include "ssr/data.hpp"
#include "ssr/errors.hpp"
#include "ssr/eval.hpp"
#include "ssr/experiments.hpp"
#include "ssr/graph.hpp"
#include "ssr/matrix_core.hpp"
#include "ssr/nscrt.hpp"
#include "ssr/ssr.hpp"

namespace py = pybind11;
using namespace ssr;

// Python callers pass one sample per row; the library stores one per column.
namespace {

ClusterLabels as_labels(const std::vector<int>& v) { return ClusterLabels::from_vector(v); }

NscrtOptions nscrt_options(double lambda, int max_iter, double tol) {
  NscrtOptions o;
  o.lambda = lambda;
  o.max_iter = max_iter;
  o.tol = tol;
  return o;
}

KmeansOptions kmeans_options(std::uint64_t seed, int restarts, int max_iter) {
  KmeansOptions o;
  o.seed = seed;
  o.restarts = restarts;
  o.max_iter = max_iter;
  return o;
}

KnnSymmetrization parse_knn_mode(const std::string& mode) {
  if (mode == "union") return KnnSymmetrization::kUnion;
  if (mode == "mutual") return KnnSymmetrization::kMutual;
  throw ValidationError("knn mode must be 'union' or 'mutual'");
}

py::tuple labeled(const LabeledData& d) {
  return py::make_tuple(Matrix(d.points.transpose()), d.labels.labels, d.label_names);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral sparse representation: codes, Scut clustering, metrics";

  py::register_exception<Error>(m, "SsrError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<SparseCodes>(m, "SparseCodes")
      .def_readonly("h", &SparseCodes::h)
      .def_readonly("hbar", &SparseCodes::hbar)
      .def_readonly("rotation", &SparseCodes::rotation)
      .def_readonly("iterations", &SparseCodes::iterations)
      .def_readonly("converged", &SparseCodes::converged)
      .def_readonly("lambda_", &SparseCodes::lambda)
      .def_readonly("objective_trace", &SparseCodes::objective_trace)
      .def("labels", [](const SparseCodes& c) { return scut(c).labels; })
      .def("__repr__", [](const SparseCodes& c) {
        return "<SparseCodes r=" + std::to_string(c.h.rows()) +
               " n=" + std::to_string(c.h.cols()) +
               " iterations=" + std::to_string(c.iterations) +
               (c.converged ? " converged>" : ">");
      });

  py::class_<RhoReport>(m, "RhoReport")
      .def_readonly("rho", &RhoReport::rho)
      .def_readonly("lambda_k", &RhoReport::lambda_k)
      .def_readonly("lambda_k_plus_1", &RhoReport::lambda_k_plus_1)
      .def_readonly("k", &RhoReport::k);

  // Linear algebra.
  m.def("sym_eig", [](const Matrix& a, Index r, bool largest) {
          EigenBasis e = sym_eig(a, r, largest ? Spectrum::kLargest : Spectrum::kSmallest);
          return py::make_tuple(e.values, e.vectors);
        },
        py::arg("m"), py::arg("r"), py::arg("largest") = false,
        "Returns (values ascending, vectors one per row).");
  m.def("compact_svd", [](const Matrix& a) {
          SvdFactors f = compact_svd(a);
          return py::make_tuple(f.u, f.s, f.v);
        },
        py::arg("a"), "Returns (U, S, V) with A = U diag(S) V.");
  m.def("procrustes_rotation", &procrustes_rotation, py::arg("x"), py::arg("hbar"));
  m.def("orthonormalize_rows", &orthonormalize_rows, py::arg("x"));

  // Graphs.
  m.def("knn_similarity", [](const Matrix& samples, Index k, const std::string& mode) {
          return build_knn_similarity(samples.transpose(), k, parse_knn_mode(mode)).matrix();
        },
        py::arg("samples"), py::arg("k"), py::arg("mode") = "union");
  m.def("laplacian", [](const Matrix& w) { return laplacian(SimilarityMatrix(w)).l; },
        py::arg("w"));
  m.def("rho", [](const Matrix& w, Index k) { return rho(laplacian(SimilarityMatrix(w)), k); },
        py::arg("w"), py::arg("k"), "Spectral gap report for the graph with weights w.");
  m.def("connected_components",
        [](const Matrix& w) { return connected_components(SimilarityMatrix(w)).labels; },
        py::arg("w"));

  // Sparse codes.
  m.def("default_lambda", &default_lambda, py::arg("n"));
  m.def("truncate", &ssr::truncate, py::arg("h"), py::arg("lambda_"));
  m.def("nscrt",
        [](const Matrix& x, double lambda, int max_iter, double tol) {
          return nscrt(x, nscrt_options(lambda, max_iter, tol));
        },
        py::arg("x"), py::arg("lambda_") = 0.0, py::arg("max_iter") = 200,
        py::arg("tol") = 0.01,
        "x is r x n with orthonormal rows. lambda_ <= 0 picks the default.");
  m.def("ssrk",
        [](const Matrix& w, Index r, double lambda, int max_iter, double tol) {
          return ssrk(SimilarityMatrix(w), r, nscrt_options(lambda, max_iter, tol)).codes;
        },
        py::arg("w"), py::arg("r"), py::arg("lambda_") = 0.0, py::arg("max_iter") = 200,
        py::arg("tol") = 0.01);
  m.def("ssro",
        [](const Matrix& samples, Index r, double lambda, int max_iter, double tol) {
          return ssro(samples.transpose(), r, nscrt_options(lambda, max_iter, tol)).codes;
        },
        py::arg("samples"), py::arg("r"), py::arg("lambda_") = 0.0,
        py::arg("max_iter") = 200, py::arg("tol") = 0.01);
  m.def("sparsity", [](const Vector& x) { return sparsity(x); }, py::arg("x"));
  m.def("mean_sparsity", &mean_sparsity, py::arg("h"));
  m.def("weight_sum_deviation", &weight_sum_deviation, py::arg("h"));

  // Clustering.
  m.def("scut", [](const Matrix& h) { return scut(h).labels; }, py::arg("h"));
  m.def("kmeans",
        [](const Matrix& samples, int k, std::uint64_t seed, int restarts, int max_iter) {
          KmeansResult res = kmeans(samples.transpose(), k,
                                    kmeans_options(seed, restarts, max_iter));
          return py::make_tuple(res.labels.labels, Matrix(res.centers.transpose()),
                                res.objective);
        },
        py::arg("samples"), py::arg("k"), py::arg("seed") = 0, py::arg("restarts") = 20,
        py::arg("max_iter") = 300, "Returns (labels, centers one per row, objective).");
  m.def("rcut",
        [](const Matrix& w, int k, std::uint64_t seed, int restarts) {
          return rcut_pipeline(SimilarityMatrix(w), k, kmeans_options(seed, restarts, 300))
              .labels;
        },
        py::arg("w"), py::arg("k"), py::arg("seed") = 0, py::arg("restarts") = 20);
  m.def("linear_pipeline",
        [](const Matrix& samples, int k, const std::string& variant, std::uint64_t seed) {
          LinearPipeline v;
          if (variant == "kpc") v = LinearPipeline::kKpc;
          else if (variant == "rcuto") v = LinearPipeline::kRcuto;
          else throw ValidationError("variant must be 'kpc' or 'rcuto'");
          return linear_pipeline(samples.transpose(), k, v, kmeans_options(seed, 20, 300))
              .labels;
        },
        py::arg("samples"), py::arg("k"), py::arg("variant") = "kpc", py::arg("seed") = 0);

  // Metrics.
  m.def("hungarian", [](const Matrix& cost) {
          Assignment a = hungarian(cost);
          return py::make_tuple(a.column_of_row, a.cost);
        },
        py::arg("cost"), "Returns (column_of_row, total cost).");
  m.def("accuracy", [](const std::vector<int>& p, const std::vector<int>& t) {
          return accuracy(as_labels(p), as_labels(t));
        }, py::arg("pred"), py::arg("truth"));
  m.def("nmi", [](const std::vector<int>& p, const std::vector<int>& t) {
          return nmi(as_labels(p), as_labels(t));
        }, py::arg("pred"), py::arg("truth"));
  m.def("rand_index", [](const std::vector<int>& p, const std::vector<int>& t) {
          return rand_index(as_labels(p), as_labels(t));
        }, py::arg("pred"), py::arg("truth"));
  m.def("rotation_recovery_score", &rotation_recovery_score, py::arg("r_hat"),
        py::arg("r_true"));
  m.def("spearman", &spearman, py::arg("x"), py::arg("y"));

  // Data.
  m.def("load_iris", [] { return labeled(load_iris()); },
        "Returns (samples 150 x 4, labels, class names).");
  m.def("load_csv", [](const std::string& path, bool has_labels) {
          return labeled(load_csv(path, has_labels));
        },
        py::arg("path"), py::arg("has_labels") = true);
  m.def("gaussian_preset", [](const std::string& name, std::uint64_t seed) {
          return labeled(gen_gaussian_mixture(gaussian_preset(name, seed)));
        },
        py::arg("name"), py::arg("seed") = 0);
  m.def("onion", [](std::uint64_t seed) { return labeled(gen_onion(seed)); },
        py::arg("seed") = 0);
  m.def("recovery_instance",
        [](Index r, Index n, const std::string& profile, double noise_a, std::uint64_t seed) {
          RecoveryInstanceSpec spec;
          spec.r = r;
          spec.n = n;
          spec.profile = parse_profile(profile);
          spec.noise_a = noise_a;
          spec.seed = seed;
          RecoveryInstance inst = gen_recovery_instance(spec);
          return py::make_tuple(inst.x, inst.r_true, inst.h_star);
        },
        py::arg("r") = 2, py::arg("n") = 1024, py::arg("profile") = "uniform",
        py::arg("noise_a") = 0.0, py::arg("seed") = 0,
        "Returns (X, true rotation, normalized indicator codes).");

  // Sweeps.
  m.def("rho_sweep",
        [](const std::vector<double>& separations, int trials, Index per_cluster, Index knn,
           std::uint64_t seed) {
          RhoSweepConfig cfg;
          cfg.separations = separations;
          cfg.trials = trials;
          cfg.per_cluster = per_cluster;
          cfg.knn = knn;
          cfg.seed = seed;
          py::list out;
          for (const RhoSweepRow& row : rho_sweep(cfg)) {
            py::dict d;
            d["separation"] = row.separation;
            d["rho"] = row.rho;
            d["mean_sparsity"] = row.mean_sparsity;
            d["scut_accuracy"] = row.scut_accuracy;
            out.append(d);
          }
          return out;
        },
        py::arg("separations"), py::arg("trials") = 50, py::arg("per_cluster") = 50,
        py::arg("knn") = 4, py::arg("seed") = 0);
  m.def("recovery_sweep",
        [](const std::vector<double>& noise_levels, int trials, Index n, std::uint64_t seed) {
          RecoverySweepConfig cfg;
          cfg.noise_levels = noise_levels;
          cfg.trials = trials;
          cfg.n = n;
          cfg.seed = seed;
          py::list out;
          for (const RecoveryRow& row : recovery_sweep(cfg)) {
            py::dict d;
            d["profile"] = row.profile;
            d["r"] = row.r;
            d["noise_a"] = row.noise_a;
            d["method"] = row.method;
            d["mean_score"] = row.mean_score;
            d["std"] = row.std;
            out.append(d);
          }
          return out;
        },
        py::arg("noise_levels"), py::arg("trials") = 20, py::arg("n") = 1024,
        py::arg("seed") = 0);
}
