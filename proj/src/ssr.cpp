#include "ssr/ssr.hpp"

#include <algorithm>
#include <cmath>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

constexpr double kCenteredTol = 1e-8;

}  // namespace

SsrResult ssrk(const SimilarityMatrix& w, Index r, NscrtOptions options) {
  const Index n = w.size();
  if (r < 1 || r > n) throw ValidationError("ssrk: r must satisfy 1 <= r <= n");
  return ssrk_from_eigen(sym_eig(laplacian(w).l, r, Spectrum::kSmallest), r, options);
}

SsrResult ssrk_from_eigen(const EigenBasis& eigen, Index r, NscrtOptions options) {
  if (r < 1 || r > eigen.vectors.rows()) {
    throw ValidationError("ssrk: r exceeds the number of supplied eigenvectors");
  }
  if (options.lambda <= 0.0) options.lambda = default_lambda(eigen.vectors.cols());

  SsrResult out;
  out.variant = SsrVariant::kKernel;
  out.r = r;
  out.lambda = options.lambda;
  out.eigen.vectors = eigen.vectors.topRows(r);
  out.eigen.values = eigen.values.head(r);
  out.eigen.source_dim = eigen.source_dim;
  out.basis = out.eigen.vectors;
  out.codes = nscrt(out.basis, options);
  return out;
}

DataMatrix center_columns(const DataMatrix& a) {
  return a.colwise() - a.rowwise().mean();
}

SsrResult ssro(const DataMatrix& a, Index r, NscrtOptions options) {
  validate_data(a, "ssro input");
  const Index n = a.cols();
  if (r < 1 || r > n) throw ValidationError("ssro: r must satisfy 1 <= r <= n");
  const double scale = a.norm();
  if (a.rowwise().sum().norm() > kCenteredTol * scale) {
    throw ValidationError(
        "ssro: data is not mean-removed; center the columns first");
  }
  if (options.lambda <= 0.0) options.lambda = default_lambda(n);

  SsrResult out;
  out.variant = SsrVariant::kOriginal;
  out.r = r;
  out.lambda = options.lambda;

  out.basis.resize(r, n);
  out.basis.row(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  if (r > 1) {
    const DataMatrix centred = center_columns(a);
    SvdFactors f = compact_svd(centred);
    if (r - 1 > f.rank()) {
      throw ValidationError("ssro: r - 1 = " + std::to_string(r - 1) +
                            " exceeds rank(A) = " + std::to_string(f.rank()));
    }
    out.basis.bottomRows(r - 1) = f.v.topRows(r - 1);
    out.svd = std::move(f);
  }
  out.codes = nscrt(out.basis, options);
  return out;
}

Matrix virtual_data(const EigenBasis& full_spectrum) {
  const Index n = full_spectrum.source_dim;
  if (full_spectrum.values.size() != n || full_spectrum.vectors.rows() != n) {
    throw ValidationError("virtual_data: needs all n eigenpairs");
  }
  const double top = full_spectrum.values(n - 1);
  const Vector weights =
      (top - full_spectrum.values.array()).max(0.0).sqrt().matrix();
  return weights.asDiagonal() * full_spectrum.vectors;
}

Dictionary dictionary(const Matrix& source, const Matrix& h) {
  if (source.cols() != h.cols()) {
    throw ValidationError("dictionary: source has " +
                          std::to_string(source.cols()) + " columns, codes have " +
                          std::to_string(h.cols()));
  }
  return Dictionary{source * h.transpose()};
}

double dictionary_orthogonality_ratio(const Dictionary& d, double scale) {
  const Index r = d.atoms.cols();
  if (scale <= 0.0) throw ValidationError("dictionary ratio: scale must be positive");
  const Matrix gram = d.atoms.transpose() * d.atoms;
  return (gram - scale * Matrix::Identity(r, r)).norm() /
         (scale * std::sqrt(static_cast<double>(r)));
}

double mutual_coherence(const Dictionary& d) {
  const Index r = d.atoms.cols();
  double best = 0.0;
  for (Index i = 0; i < r; ++i) {
    for (Index j = i + 1; j < r; ++j) {
      const double denom = d.atoms.col(i).norm() * d.atoms.col(j).norm();
      if (denom > 0.0) {
        best = std::max(best, std::abs(d.atoms.col(i).dot(d.atoms.col(j))) / denom);
      }
    }
  }
  return best;
}

Matrix code_gram(const Matrix& h) { return h.transpose() * h; }

double weight_sum_deviation(const Matrix& h) {
  // 1^T H^T H = (H^T (H 1))^T, computed without forming the n x n Gram.
  const Vector sums = h.transpose() * (h * Vector::Ones(h.cols()));
  return (sums.array() - 1.0).abs().maxCoeff();
}

double sparsity(const Eigen::Ref<const Vector>& x) {
  const double l1 = x.lpNorm<1>();
  if (l1 == 0.0) throw ValidationError("sparsity: zero vector");
  return x.norm() / l1;
}

double mean_sparsity(const Matrix& h) {
  double total = 0.0;
  Index counted = 0;
  for (Index j = 0; j < h.cols(); ++j) {
    if (h.col(j).lpNorm<1>() == 0.0) continue;
    total += sparsity(h.col(j));
    ++counted;
  }
  if (counted == 0) throw ValidationError("mean_sparsity: all code columns are zero");
  return total / static_cast<double>(counted);
}

SimilarityMatrix linear_kernel_similarity(const DataMatrix& a) {
  validate_data(a, "linear kernel input");
  Matrix w = a.transpose() * a;
  const double beta = -w.minCoeff();
  w.array() += beta;
  w = 0.5 * (w + w.transpose());
  w.diagonal().setZero();
  w = w.cwiseMax(0.0);
  return SimilarityMatrix(std::move(w));
}

}  // namespace ssr
