#include "ssr/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssr/data.hpp"
#include "ssr/errors.hpp"
#include "ssr/eval.hpp"
#include "ssr/experiments.hpp"
#include "ssr/ssr.hpp"

namespace ssr::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kArtifact = "spectral-ssr";

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path + "'");
}

json header(const std::string& command, json config) {
  json doc;
  doc["artifact"] = kArtifact;
  doc["version"] = SSR_VERSION;
  doc["command"] = command;
  doc["config"] = std::move(config);
  return doc;
}

// '#' comment lines embedding the artifact version and resolved config.
std::string csv_preamble(const std::string& command, const json& config) {
  return std::string("# ") + kArtifact + " " + SSR_VERSION + " " + command + "\n" +
         "# config " + config.dump() + "\n";
}

json labels_json(const ClusterLabels& labels) { return labels.labels; }

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto slash = item.find('/');
    try {
      size_t used = 0;
      if (slash == std::string::npos) {
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const std::string num = item.substr(0, slash);
        const std::string den = item.substr(slash + 1);
        const double d = std::stod(den, &used);
        if (used != den.size() || d == 0.0) throw std::invalid_argument(item);
        out.push_back(std::stod(num) / d);
      }
    } catch (const std::exception&) {
      throw ValidationError("cannot parse number '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw ValidationError("empty number list");
  return out;
}

std::vector<std::string> parse_word_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Data sources shared by cluster, ssr and gen.

struct SourceOptions {
  std::string input;
  bool labels = false;
  std::string edges;
  std::string truth;
  std::string preset;
};

struct Dataset {
  std::optional<DataMatrix> points;
  std::optional<SimilarityMatrix> w;
  std::optional<ClusterLabels> truth;
  Index n = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--input", src.input, "CSV file, one sample per row");
  cmd->add_flag("--labels", src.labels, "the CSV's last column holds class labels");
  cmd->add_option("--edges", src.edges, "edge list 'i j [w]' giving the similarity graph");
  cmd->add_option("--truth", src.truth, "file with one ground-truth label per line");
  cmd->add_option("--preset", src.preset, "bundled data: g1, g2, g3, onion, iris")
      ->check(CLI::IsMember({"g1", "g2", "g3", "onion", "iris"}));
}

json source_json(const SourceOptions& src) {
  json j;
  j["input"] = src.input;
  j["labels"] = src.labels;
  j["edges"] = src.edges;
  j["truth"] = src.truth;
  j["preset"] = src.preset;
  return j;
}

Dataset load_source(const SourceOptions& src, std::uint64_t seed) {
  const int given = !src.input.empty() + !src.edges.empty() + !src.preset.empty();
  if (given != 1) {
    throw ValidationError("give exactly one of --input, --edges, --preset");
  }
  Dataset ds;
  if (!src.preset.empty()) {
    LabeledData data;
    if (src.preset == "onion") {
      data = gen_onion(seed);
    } else if (src.preset == "iris") {
      data = load_iris();
    } else {
      data = gen_gaussian_mixture(gaussian_preset(src.preset, seed));
    }
    ds.points = std::move(data.points);
    ds.truth = std::move(data.labels);
  } else if (!src.input.empty()) {
    LabeledData data = load_csv(src.input, src.labels);
    ds.points = std::move(data.points);
    if (src.labels) ds.truth = std::move(data.labels);
  } else {
    ds.w = load_edge_list(src.edges);
  }
  ds.n = ds.points ? ds.points->cols() : ds.w->size();
  if (!src.truth.empty()) ds.truth = load_labels(src.truth);
  if (ds.truth && ds.truth->size() != ds.n) {
    throw ValidationError("ground truth has " + std::to_string(ds.truth->size()) +
                          " labels for " + std::to_string(ds.n) + " samples");
  }
  return ds;
}

const DataMatrix& need_points(const Dataset& ds, const std::string& method) {
  if (!ds.points) {
    throw ValidationError("method '" + method + "' needs feature data, not an edge list");
  }
  return *ds.points;
}

KnnSymmetrization parse_knn_mode(const std::string& mode) {
  return mode == "mutual" ? KnnSymmetrization::kMutual : KnnSymmetrization::kUnion;
}

// ---------------------------------------------------------------------------
// cluster

struct ClusterOptions {
  SourceOptions src;
  std::string method = "ssrk-scut";
  Index knn = 4;
  std::string knn_mode = "union";
  int clusters = 0;
  Index r = 0;
  double lambda = 0.0;
  int max_iter = 200;
  double tol = 0.01;
  std::uint64_t seed = 0;
  int restarts = 20;
  std::string out;
  std::string format = "json";
};

json cluster_config(const ClusterOptions& o) {
  json c;
  c["source"] = source_json(o.src);
  c["method"] = o.method;
  c["k"] = o.knn;
  c["knn_mode"] = o.knn_mode;
  c["K"] = o.clusters;
  c["r"] = o.r;
  c["lambda"] = o.lambda;
  c["max_iter"] = o.max_iter;
  c["tol"] = o.tol;
  c["seed"] = o.seed;
  c["restarts"] = o.restarts;
  c["format"] = o.format;
  return c;
}

int cmd_cluster(ClusterOptions o, std::ostream& out) {
  if (o.clusters < 1) throw ValidationError("--K must be at least 1");
  if (o.r == 0) o.r = o.clusters;
  if (o.r < 1) throw ValidationError("--r must be at least 1");
  if (o.restarts < 1) throw ValidationError("--restarts must be at least 1");

  json timings;
  auto t0 = Clock::now();
  const Dataset ds = load_source(o.src, o.seed);
  timings["load"] = elapsed_ms(t0);
  if (o.clusters > ds.n) throw ValidationError("--K exceeds the sample count");
  if (o.lambda < 0.0) throw ValidationError("--lambda must be >= 0");

  const NscrtOptions nopts{o.lambda, o.max_iter, o.tol};
  const KmeansOptions kopts{o.seed, o.restarts, 300};
  const bool graph_method = o.method == "ssrk-scut" || o.method == "rcut";

  std::optional<SimilarityMatrix> w;
  if (graph_method) {
    t0 = Clock::now();
    w = ds.w ? *ds.w
             : build_knn_similarity(need_points(ds, o.method), o.knn,
                                    parse_knn_mode(o.knn_mode));
    timings["graph"] = elapsed_ms(t0);
  }

  json result;
  ClusterLabels labels;
  std::optional<DataMatrix> centred;
  t0 = Clock::now();
  if (o.method == "ssrk-scut" || o.method == "ssro-scut") {
    SsrResult res;
    if (o.method == "ssrk-scut") {
      res = ssrk(*w, o.r, nopts);
    } else {
      centred = center_columns(need_points(ds, o.method));
      res = ssro(*centred, o.r, nopts);
    }
    labels = scut(res.codes);
    result["nscrt"] = {{"lambda", res.lambda},
                       {"iterations", res.codes.iterations},
                       {"converged", res.codes.converged}};
    result["mean_sparsity"] = mean_sparsity(res.codes.h);
    result["weight_sum_deviation"] = weight_sum_deviation(res.codes.h);
  } else if (o.method == "rcut") {
    labels = rcut_pipeline(*w, o.clusters, kopts);
  } else if (o.method == "rcuto" || o.method == "kpc") {
    labels = linear_pipeline(need_points(ds, o.method), o.clusters,
                             o.method == "kpc" ? LinearPipeline::kKpc
                                               : LinearPipeline::kRcuto,
                             kopts);
  } else {
    const KmeansResult km = kmeans(need_points(ds, o.method), o.clusters, kopts);
    labels = km.labels;
    result["kmeans"] = {{"objective", km.objective}, {"iterations", km.iterations}};
  }
  timings["cluster"] = elapsed_ms(t0);

  // rho of the graph the method works on: the kNN / edge-list graph, or the
  // linear-kernel graph for methods that use the data directly.
  t0 = Clock::now();
  if (o.clusters < ds.n) {
    const SimilarityMatrix rho_graph =
        w ? *w
          : linear_kernel_similarity(centred ? *centred
                                             : center_columns(need_points(ds, o.method)));
    const RhoReport rep = rho(laplacian(rho_graph), o.clusters);
    result["rho"] = {{"rho", rep.rho},
                     {"lambda_K", rep.lambda_k},
                     {"lambda_K_plus_1", rep.lambda_k_plus_1},
                     {"K", rep.k},
                     {"graph", w ? "similarity" : "linear-kernel"}};
    if (w) result["components"] = connected_components(*w).count;
  }
  timings["rho"] = elapsed_ms(t0);

  result["n"] = ds.n;
  result["K"] = labels.k;
  if (ds.truth) {
    result["metrics"] = {{"accuracy", accuracy(labels, *ds.truth)},
                         {"nmi", nmi(labels, *ds.truth)},
                         {"nmi_normalization", "geometric"},
                         {"rand_index", rand_index(labels, *ds.truth)}};
  }
  result["labels"] = labels_json(labels);

  if (o.format == "csv") {
    std::string text = csv_preamble("cluster", cluster_config(o));
    text += ds.truth ? "index,label,truth\n" : "index,label\n";
    for (Index i = 0; i < ds.n; ++i) {
      text += std::to_string(i) + "," +
              std::to_string(labels.labels[static_cast<size_t>(i)]);
      if (ds.truth) text += "," + std::to_string(ds.truth->labels[static_cast<size_t>(i)]);
      text += "\n";
    }
    write_output(o.out, text, out);
  } else {
    json doc = header("cluster", cluster_config(o));
    doc["result"] = std::move(result);
    doc["timings_ms"] = std::move(timings);
    write_output(o.out, doc.dump(2) + "\n", out);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// ssr

struct SsrOptions {
  SourceOptions src;
  std::string variant = "kernel";
  Index knn = 4;
  std::string knn_mode = "union";
  Index r = 0;
  double lambda = 0.0;
  int max_iter = 200;
  double tol = 0.01;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

int cmd_ssr(const SsrOptions& o, std::ostream& out) {
  if (o.r < 1) throw ValidationError("--r must be at least 1");
  if (o.lambda < 0.0) throw ValidationError("--lambda must be >= 0");
  json config;
  config["source"] = source_json(o.src);
  config["variant"] = o.variant;
  config["k"] = o.knn;
  config["knn_mode"] = o.knn_mode;
  config["r"] = o.r;
  config["lambda"] = o.lambda;
  config["max_iter"] = o.max_iter;
  config["tol"] = o.tol;
  config["seed"] = o.seed;
  config["format"] = o.format;

  const auto t0 = Clock::now();
  const Dataset ds = load_source(o.src, o.seed);
  const NscrtOptions nopts{o.lambda, o.max_iter, o.tol};
  SsrResult res;
  if (o.variant == "kernel") {
    const SimilarityMatrix w =
        ds.w ? *ds.w
             : build_knn_similarity(*ds.points, o.knn, parse_knn_mode(o.knn_mode));
    res = ssrk(w, o.r, nopts);
  } else {
    res = ssro(center_columns(need_points(ds, "ssro")), o.r, nopts);
  }
  const double ms = elapsed_ms(t0);

  if (o.format == "csv") {
    std::string text = csv_preamble("ssr", config);
    for (Index j = 0; j < res.codes.h.cols(); ++j) {
      for (Index i = 0; i < res.codes.h.rows(); ++i) {
        if (i > 0) text += ",";
        text += fmt17(res.codes.h(i, j));
      }
      text += "\n";
    }
    write_output(o.out, text, out);
    return kOk;
  }
  json doc = header("ssr", config);
  json result;
  result["r"] = res.r;
  result["lambda"] = res.lambda;
  result["iterations"] = res.codes.iterations;
  result["converged"] = res.codes.converged;
  result["mean_sparsity"] = mean_sparsity(res.codes.h);
  result["weight_sum_deviation"] = weight_sum_deviation(res.codes.h);
  result["objective_trace"] = res.codes.objective_trace;
  if (res.variant == SsrVariant::kKernel) result["eigenvalues"] = std::vector<double>(
      res.eigen.values.data(), res.eigen.values.data() + res.eigen.values.size());
  result["rotation"] = matrix_rows(res.codes.rotation);
  result["codes"] = matrix_rows(res.codes.h);
  doc["result"] = std::move(result);
  doc["timings_ms"] = {{"total", ms}};
  write_output(o.out, doc.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------------------
// recovery-sweep

struct RecoveryOptions {
  std::string profiles = "uniform,exponential";
  Index r = 16;
  Index exp_r = 9;
  Index n = 1024;
  std::string noise = "1/32,1/16,1/8,1/4";
  int trials = 20;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  int max_iter = 200;
  double tol = 0.01;
  std::string out;
};

int cmd_recovery(const RecoveryOptions& o, std::ostream& out, std::ostream& err) {
  RecoverySweepConfig cfg;
  cfg.profiles.clear();
  for (const auto& p : parse_word_list(o.profiles)) cfg.profiles.push_back(parse_profile(p));
  cfg.uniform_r = o.r;
  cfg.exponential_r = o.exp_r;
  cfg.n = o.n;
  cfg.noise_levels = parse_number_list(o.noise);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.nscrt = NscrtOptions{o.lambda, o.max_iter, o.tol};

  json config;
  config["profiles"] = o.profiles;
  config["r"] = o.r;
  config["exp_r"] = o.exp_r;
  config["n"] = o.n;
  config["noise"] = cfg.noise_levels;
  config["trials"] = o.trials;
  config["seed"] = o.seed;
  config["lambda"] = o.lambda;
  config["max_iter"] = o.max_iter;
  config["tol"] = o.tol;

  const auto t0 = Clock::now();
  const std::vector<RecoveryRow> rows = recovery_sweep(cfg);
  std::string text = csv_preamble("recovery-sweep", config);
  text += "profile,r,noise_a,method,mean_score,std\n";
  for (const auto& row : rows) {
    text += row.profile + "," + std::to_string(row.r) + "," + fmt17(row.noise_a) + "," +
            row.method + "," + fmt17(row.mean_score) + "," + fmt17(row.std) + "\n";
  }
  write_output(o.out, text, out);
  err << "recovery-sweep: " << rows.size() << " rows in " << elapsed_ms(t0) << " ms\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// rho-sweep

struct RhoOptions {
  std::string separations = "1,1.5,2,2.5,3,3.5,4,5,6,8";
  Index per_cluster = 50;
  Index knn = 4;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_rho(const RhoOptions& o, std::ostream& out, std::ostream& err) {
  RhoSweepConfig cfg;
  cfg.separations = parse_number_list(o.separations);
  cfg.per_cluster = o.per_cluster;
  cfg.knn = o.knn;
  cfg.trials = o.trials;
  cfg.seed = o.seed;

  json config;
  config["separations"] = cfg.separations;
  config["per_cluster"] = o.per_cluster;
  config["k"] = o.knn;
  config["K"] = 3;
  config["trials"] = o.trials;
  config["seed"] = o.seed;

  const auto t0 = Clock::now();
  const std::vector<RhoSweepRow> rows = rho_sweep(cfg);
  std::string text = csv_preamble("rho-sweep", config);
  text += "separation,rho,mean_sparsity,scut_accuracy\n";
  std::vector<double> rhos, sparsities, accs;
  for (const auto& row : rows) {
    text += fmt17(row.separation) + "," + fmt17(row.rho) + "," +
            fmt17(row.mean_sparsity) + "," + fmt17(row.scut_accuracy) + "\n";
    rhos.push_back(row.rho);
    sparsities.push_back(row.mean_sparsity);
    accs.push_back(row.scut_accuracy);
  }
  write_output(o.out, text, out);
  if (rows.size() >= 2) {
    err << "rho-sweep: spearman(rho, accuracy) = " << spearman(rhos, accs)
        << ", spearman(sparsity, accuracy) = " << spearman(sparsities, accs) << "\n";
  }
  err << "rho-sweep: " << rows.size() << " rows in " << elapsed_ms(t0) << " ms\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalOptions {
  std::string pred;
  std::string truth;
  std::string out;
};

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const ClusterLabels pred = load_labels(o.pred);
  const ClusterLabels truth = load_labels(o.truth);
  json config;
  config["pred"] = o.pred;
  config["truth"] = o.truth;
  json doc = header("eval", config);
  doc["result"] = {{"n", pred.size()},
                   {"accuracy", accuracy(pred, truth)},
                   {"nmi", nmi(pred, truth)},
                   {"nmi_normalization", "geometric"},
                   {"rand_index", rand_index(pred, truth)}};
  write_output(o.out, doc.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string preset = "g1";
  std::uint64_t seed = 0;
  Index r = 16;
  Index n = 1024;
  std::string profile = "uniform";
  double noise = 0.0;
  std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  json config;
  config["preset"] = o.preset;
  config["seed"] = o.seed;
  DataMatrix points;
  ClusterLabels labels;
  if (o.preset == "recovery") {
    config["r"] = o.r;
    config["n"] = o.n;
    config["profile"] = o.profile;
    config["noise"] = o.noise;
    RecoveryInstanceSpec spec{o.r, o.n, parse_profile(o.profile), o.noise, o.seed};
    const RecoveryInstance inst = gen_recovery_instance(spec);
    points = inst.x;
    labels = scut(inst.h_star);
  } else if (o.preset == "onion") {
    LabeledData d = gen_onion(o.seed);
    points = std::move(d.points);
    labels = std::move(d.labels);
  } else if (o.preset == "iris") {
    LabeledData d = load_iris();
    points = std::move(d.points);
    labels = std::move(d.labels);
  } else {
    LabeledData d = gen_gaussian_mixture(gaussian_preset(o.preset, o.seed));
    points = std::move(d.points);
    labels = std::move(d.labels);
  }
  std::string text = csv_preamble("gen", config);
  for (Index j = 0; j < points.cols(); ++j) {
    for (Index i = 0; i < points.rows(); ++i) text += fmt17(points(i, j)) + ",";
    text += std::to_string(labels.labels[static_cast<size_t>(j)]) + "\n";
  }
  write_output(o.out, text, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral sparse representation: sparse codes, Scut clustering and "
               "experiment sweeps"};
  app.name(args.empty() ? "ssr" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", SSR_VERSION);

  const std::vector<std::string> methods = {"ssrk-scut", "ssro-scut", "rcut",
                                            "rcuto",     "kpc",       "kmeans"};

  ClusterOptions cl;
  auto* cluster = app.add_subcommand("cluster", "cluster a dataset and score it");
  add_source_options(cluster, cl.src);
  cluster->add_option("--method", cl.method, "clustering method")
      ->check(CLI::IsMember(methods));
  cluster->add_option("--k", cl.knn, "neighbours in the self-tuning kNN graph");
  cluster->add_option("--knn-mode", cl.knn_mode, "kNN symmetrization")
      ->check(CLI::IsMember({"union", "mutual"}));
  cluster->add_option("--K", cl.clusters, "number of clusters")->required();
  cluster->add_option("--r", cl.r, "code dimension (default K)");
  cluster->add_option("--lambda", cl.lambda, "truncation threshold (default 0.6/sqrt(n))");
  cluster->add_option("--max-iter", cl.max_iter, "NSCrt iteration cap");
  cluster->add_option("--tol", cl.tol, "NSCrt convergence tolerance");
  cluster->add_option("--seed", cl.seed, "random seed");
  cluster->add_option("--restarts", cl.restarts, "K-means restarts");
  cluster->add_option("--out", cl.out, "result file (default stdout)");
  cluster->add_option("--format", cl.format)->check(CLI::IsMember({"json", "csv"}));

  SsrOptions so;
  auto* ssr_cmd = app.add_subcommand("ssr", "compute sparse codes");
  add_source_options(ssr_cmd, so.src);
  ssr_cmd->add_option("--variant", so.variant)->check(CLI::IsMember({"kernel", "original"}));
  ssr_cmd->add_option("--k", so.knn, "neighbours in the self-tuning kNN graph");
  ssr_cmd->add_option("--knn-mode", so.knn_mode)->check(CLI::IsMember({"union", "mutual"}));
  ssr_cmd->add_option("--r", so.r, "code dimension")->required();
  ssr_cmd->add_option("--lambda", so.lambda, "truncation threshold (default 0.6/sqrt(n))");
  ssr_cmd->add_option("--max-iter", so.max_iter);
  ssr_cmd->add_option("--tol", so.tol);
  ssr_cmd->add_option("--seed", so.seed);
  ssr_cmd->add_option("--out", so.out);
  ssr_cmd->add_option("--format", so.format)->check(CLI::IsMember({"json", "csv"}));

  RecoveryOptions ro;
  auto* recovery = app.add_subcommand("recovery-sweep", "rotation-recovery experiment");
  recovery->add_option("--profiles", ro.profiles, "comma list of uniform, exponential");
  recovery->add_option("--r", ro.r, "code dimension for the uniform profile");
  recovery->add_option("--exp-r", ro.exp_r, "code dimension for the exponential profile");
  recovery->add_option("--n", ro.n, "samples per instance");
  recovery->add_option("--noise", ro.noise, "comma list of noise levels a (fractions ok)");
  recovery->add_option("--trials", ro.trials);
  recovery->add_option("--seed", ro.seed);
  recovery->add_option("--lambda", ro.lambda);
  recovery->add_option("--max-iter", ro.max_iter);
  recovery->add_option("--tol", ro.tol);
  recovery->add_option("--out", ro.out);

  RhoOptions rh;
  auto* rho_cmd = app.add_subcommand("rho-sweep", "Gaussian-overlap sweep of rho, sparsity and accuracy");
  rho_cmd->add_option("--separations", rh.separations, "comma list of triangle side lengths");
  rho_cmd->add_option("--per-cluster", rh.per_cluster);
  rho_cmd->add_option("--k", rh.knn);
  rho_cmd->add_option("--trials", rh.trials);
  rho_cmd->add_option("--seed", rh.seed);
  rho_cmd->add_option("--out", rh.out);

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "score predicted labels against ground truth");
  eval_cmd->add_option("--pred", ev.pred)->required();
  eval_cmd->add_option("--truth", ev.truth)->required();
  eval_cmd->add_option("--out", ev.out);

  GenOptions ge;
  auto* gen = app.add_subcommand("gen", "write a synthetic or bundled dataset as CSV");
  gen->add_option("--preset", ge.preset)
      ->check(CLI::IsMember({"g1", "g2", "g3", "onion", "iris", "recovery"}));
  gen->add_option("--seed", ge.seed);
  gen->add_option("--r", ge.r);
  gen->add_option("--n", ge.n);
  gen->add_option("--profile", ge.profile)->check(CLI::IsMember({"uniform", "exponential"}));
  gen->add_option("--noise", ge.noise);
  gen->add_option("--out", ge.out);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ssr");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SSR_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (*cluster) return cmd_cluster(cl, out);
    if (*ssr_cmd) return cmd_ssr(so, out);
    if (*recovery) return cmd_recovery(ro, out, err);
    if (*rho_cmd) return cmd_rho(rh, out, err);
    if (*eval_cmd) return cmd_eval(ev, out);
    if (*gen) return cmd_gen(ge, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kValidation;
}

}  // namespace ssr::cli
