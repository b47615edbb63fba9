#include "ssr/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& token, double& out) {
  const std::string t = trim(token);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

// Maps label strings to 0..K-1 in order of first appearance.
class LabelIndexer {
 public:
  int index(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(name);
    return id;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
};

Vector point2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

}  // namespace

LabeledData gen_gaussian_mixture(const GaussianMixtureSpec& spec) {
  if (spec.components.empty()) {
    throw ValidationError("gaussian mixture: needs at least one component");
  }
  const Index dim = spec.components.front().center.size();
  Index total = 0;
  for (const auto& c : spec.components) {
    if (c.count < 1) throw ValidationError("gaussian mixture: counts must be >= 1");
    if (!(c.scale > 0.0)) throw ValidationError("gaussian mixture: scales must be > 0");
    if (c.center.size() != dim || dim < 1) {
      throw ValidationError("gaussian mixture: centers must share one dimension");
    }
    total += c.count;
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  LabeledData out;
  out.points.resize(dim, total);
  out.labels.k = static_cast<int>(spec.components.size());
  out.labels.labels.reserve(static_cast<size_t>(total));
  Index col = 0;
  for (size_t c = 0; c < spec.components.size(); ++c) {
    const auto& comp = spec.components[c];
    for (Index i = 0; i < comp.count; ++i, ++col) {
      for (Index d = 0; d < dim; ++d) {
        out.points(d, col) = comp.center(d) + comp.scale * normal(rng);
      }
      out.labels.labels.push_back(static_cast<int>(c));
    }
    out.label_names.push_back("c" + std::to_string(c));
  }
  return out;
}

GaussianMixtureSpec gaussian_triangle(double side, Index per_cluster,
                                      std::uint64_t seed) {
  GaussianMixtureSpec spec;
  spec.seed = seed;
  const double h = side * std::sqrt(3.0) / 2.0;
  spec.components = {
      {point2(0.0, 0.0), 1.0, per_cluster},
      {point2(side, 0.0), 1.0, per_cluster},
      {point2(side / 2.0, h), 1.0, per_cluster},
  };
  return spec;
}

double gaussian_preset_separation(const std::string& name) {
  if (name == "g1") return 8.0;
  if (name == "g2") return 4.0;
  if (name == "g3") return 2.5;
  throw ValidationError("unknown gaussian preset '" + name + "' (g1, g2, g3)");
}

GaussianMixtureSpec gaussian_preset(const std::string& name, std::uint64_t seed) {
  return gaussian_triangle(gaussian_preset_separation(name), 50, seed);
}

LabeledData gen_onion(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  constexpr Index kSizes[] = {5, 20, 50};
  constexpr double kRadii[] = {0.0, 1.5, 3.0};
  constexpr double kBlobScale = 0.15;
  constexpr double kRingNoise = 0.1;
  constexpr double kAngleJitter = 0.3;  // fraction of the mean angular gap

  LabeledData out;
  out.points.resize(2, 75);
  out.labels.k = 3;
  Index col = 0;
  for (int c = 0; c < 3; ++c) {
    const double gap = 2.0 * std::numbers::pi / static_cast<double>(kSizes[c]);
    for (Index i = 0; i < kSizes[c]; ++i, ++col) {
      if (kRadii[c] == 0.0) {
        out.points(0, col) = kBlobScale * normal(rng);
        out.points(1, col) = kBlobScale * normal(rng);
      } else {
        const double t = gap * (static_cast<double>(i) + kAngleJitter * normal(rng));
        const double rad = kRadii[c] + kRingNoise * normal(rng);
        out.points(0, col) = rad * std::cos(t);
        out.points(1, col) = rad * std::sin(t);
      }
      out.labels.labels.push_back(c);
    }
  }
  out.label_names = {"core", "inner", "outer"};
  return out;
}

std::vector<Index> recovery_cluster_sizes(SizeProfile profile, Index r, Index n) {
  if (r < 1 || n < r) throw ValidationError("recovery: need 1 <= r <= n");
  std::vector<Index> sizes;
  if (profile == SizeProfile::kUniform) {
    if (n % r != 0) {
      throw ValidationError("recovery: uniform profile needs r to divide n");
    }
    sizes.assign(static_cast<size_t>(r), n / r);
    return sizes;
  }
  if (r > 62) throw ValidationError("recovery: exponential profile needs r <= 62");
  Index used = 0;
  for (Index k = 1; k < r; ++k) {
    sizes.push_back(Index{1} << k);
    used += sizes.back();
  }
  if (n - used < 1) {
    throw ValidationError("recovery: exponential profile leaves no samples for the last cluster");
  }
  sizes.push_back(n - used);
  return sizes;
}

Matrix normalized_indicator(const std::vector<Index>& sizes) {
  Index n = 0;
  for (Index s : sizes) n += s;
  Matrix h = Matrix::Zero(static_cast<Index>(sizes.size()), n);
  Index col = 0;
  for (size_t k = 0; k < sizes.size(); ++k) {
    const double value = 1.0 / std::sqrt(static_cast<double>(sizes[k]));
    h.block(static_cast<Index>(k), col, 1, sizes[k]).setConstant(value);
    col += sizes[k];
  }
  return h;
}

RotationMatrix random_rotation(Index r, std::uint64_t seed) {
  if (r < 1) throw ValidationError("random_rotation: r must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(r, r);
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < r; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix upper = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < r; ++k) {
    if (upper(k, k) < 0.0) q.col(k) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

RecoveryInstance gen_recovery_instance(const RecoveryInstanceSpec& spec) {
  if (spec.noise_a < 0.0) throw ValidationError("recovery: noise_a must be >= 0");
  RecoveryInstance out;
  out.sizes = recovery_cluster_sizes(spec.profile, spec.r, spec.n);
  out.h_star = normalized_indicator(out.sizes);
  const Index largest = *std::max_element(out.sizes.begin(), out.sizes.end());
  out.noise_sigma = spec.noise_a / std::sqrt(static_cast<double>(largest));

  std::mt19937_64 rng(spec.seed);
  out.r_true = random_rotation(spec.r, rng());
  Matrix noisy = out.h_star;
  if (out.noise_sigma > 0.0) {
    std::normal_distribution<double> normal(0.0, out.noise_sigma);
    for (Index j = 0; j < noisy.cols(); ++j) {
      for (Index i = 0; i < noisy.rows(); ++i) noisy(i, j) += normal(rng);
    }
  }
  out.x = out.r_true * noisy;
  return out;
}

LabeledData load_csv(const std::string& path, bool has_labels) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::vector<std::string> raw_labels;
  size_t width = 0;
  std::string line;
  for (size_t line_no = 1; std::getline(in, line); ++line_no) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (t.back() == ',') fields.emplace_back();

    const size_t numeric = has_labels ? fields.size() - 1 : fields.size();
    if (has_labels && fields.size() < 2) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected at least one feature and a label");
    }
    if (rows.empty()) {
      width = numeric;
    } else if (numeric != width) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(width) + " numeric fields, found " +
                       std::to_string(numeric));
    }
    std::vector<double> values(numeric);
    for (size_t i = 0; i < numeric; ++i) {
      if (!parse_double(fields[i], values[i])) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": non-numeric cell '" + trim(fields[i]) + "' in column " +
                         std::to_string(i + 1));
      }
    }
    rows.push_back(std::move(values));
    if (has_labels) raw_labels.push_back(trim(fields.back()));
  }
  if (rows.empty()) throw ParseError(path + ": no data rows");

  LabeledData out;
  out.points.resize(static_cast<Index>(width), static_cast<Index>(rows.size()));
  for (size_t j = 0; j < rows.size(); ++j) {
    for (size_t i = 0; i < width; ++i) {
      out.points(static_cast<Index>(i), static_cast<Index>(j)) = rows[j][i];
    }
  }
  if (has_labels) {
    LabelIndexer indexer;
    for (const auto& name : raw_labels) out.labels.labels.push_back(indexer.index(name));
    out.labels.k = static_cast<int>(indexer.names().size());
    out.label_names = indexer.names();
  }
  return out;
}

void save_csv(const std::string& path, const DataMatrix& points,
              const std::optional<ClusterLabels>& labels) {
  if (labels && labels->size() != points.cols()) {
    throw ValidationError("save_csv: label count differs from sample count");
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  char buf[32];
  for (Index j = 0; j < points.cols(); ++j) {
    for (Index i = 0; i < points.rows(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", points(i, j));
      if (i > 0) out << ',';
      out << buf;
    }
    if (labels) out << ',' << labels->labels[static_cast<size_t>(j)];
    out << '\n';
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

SimilarityMatrix load_edge_list(const std::string& path) {
  struct Edge {
    long long i, j;
    double w;
    size_t line;
  };
  std::ifstream in = open_input(path);
  std::vector<Edge> edges;
  bool one_based = false;
  std::string line;
  for (size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      if (t.find("one-based") != std::string::npos) one_based = true;
      continue;
    }
    std::stringstream ss(t);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected 'i j' or 'i j w'");
    }
    double i = 0.0, j = 0.0, w = 1.0;
    if (!parse_double(tokens[0], i) || !parse_double(tokens[1], j) ||
        (tokens.size() == 3 && !parse_double(tokens[2], w)) ||
        i != std::floor(i) || j != std::floor(j)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": malformed edge");
    }
    if (w < 0.0) {
      throw ValidationError(path + ":" + std::to_string(line_no) +
                            ": negative edge weight");
    }
    edges.push_back({static_cast<long long>(i), static_cast<long long>(j), w, line_no});
  }
  if (edges.empty()) throw ParseError(path + ": no edges");

  const long long offset = one_based ? 1 : 0;
  long long n = 0;
  for (auto& e : edges) {
    e.i -= offset;
    e.j -= offset;
    if (e.i < 0 || e.j < 0) {
      throw ParseError(path + ":" + std::to_string(e.line) + ": node id out of range");
    }
    n = std::max({n, e.i + 1, e.j + 1});
  }
  Matrix w = Matrix::Zero(n, n);
  for (const auto& e : edges) {
    if (e.i == e.j) continue;
    const double v = std::max(w(e.i, e.j), e.w);
    w(e.i, e.j) = v;
    w(e.j, e.i) = v;
  }
  return SimilarityMatrix(std::move(w));
}

std::string bundled_data_dir() {
  if (const char* env = std::getenv("SSR_DATA_DIR")) return env;
  return SSR_DATA_DIR;
}

LabeledData load_iris() { return load_csv(bundled_data_dir() + "/iris.csv", true); }

ClusterLabels load_labels(const std::string& path) {
  std::ifstream in = open_input(path);
  LabelIndexer indexer;
  ClusterLabels out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.labels.push_back(indexer.index(t));
  }
  if (out.labels.empty()) throw ParseError(path + ": no labels");
  out.k = static_cast<int>(indexer.names().size());
  return out;
}

}  // namespace ssr
