#include "ssr/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxEigSweeps = 100;
constexpr int kMaxSvdSweeps = 80;

// Flip the sign so the largest-magnitude entry is positive. Near-ties are
// resolved towards the lowest index so constant vectors stay deterministic.
template <typename Vec>
bool needs_flip(const Vec& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return false;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= peak * (1.0 - 1e-9)) return v(i) < 0.0;
  }
  return false;
}

std::vector<Index> argsort(const Vector& values, bool descending) {
  std::vector<Index> order(static_cast<size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return descending ? values(a) > values(b) : values(a) < values(b);
  });
  return order;
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Index q = 1; q < a.cols(); ++q) {
    for (Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
  }
  return std::sqrt(2.0 * sum);
}

// Appends orthonormal columns to q (whose first `filled` columns are
// orthonormal) by projecting standard basis vectors.
void complete_orthonormal_columns(Matrix& q, Index filled) {
  const Index rows = q.rows();
  for (Index col = filled; col < q.cols(); ++col) {
    Vector best;
    double best_norm = -1.0;
    for (Index j = 0; j < rows; ++j) {
      Vector w = Vector::Unit(rows, j);
      for (int pass = 0; pass < 2; ++pass) {
        for (Index k = 0; k < col; ++k) w -= q.col(k).dot(w) * q.col(k);
      }
      const double nw = w.norm();
      if (nw > best_norm + 1e-12) {
        best_norm = nw;
        best = w;
      }
    }
    q.col(col) = best / best_norm;
  }
}

}  // namespace

void validate_data(const Matrix& a, const char* what) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw ValidationError(std::string(what) + " must be non-empty");
  }
  if (!a.allFinite()) {
    throw ValidationError(std::string(what) + " has non-finite entries");
  }
}

Index SvdFactors::rank(double rel_tol) const {
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double tol =
      rel_tol >= 0.0
          ? rel_tol * s(0)
          : static_cast<double>(std::max(u.rows(), v.cols())) * kEps * s(0);
  return (s.array() > tol).count();
}

EigenBasis sym_eig(const Matrix& m, Index r, Spectrum which) {
  validate_data(m, "eigen input");
  if (m.rows() != m.cols()) throw ValidationError("sym_eig: matrix is not square");
  const Index n = m.rows();
  if (r < 1 || r > n) {
    throw ValidationError("sym_eig: requested " + std::to_string(r) +
                          " eigenpairs of a " + std::to_string(n) + "x" +
                          std::to_string(n) + " matrix");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw ValidationError("sym_eig: matrix is not symmetric");
  }

  Matrix a = 0.5 * (m + m.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double frob = a.norm();
  const double stop = 4.0 * kEps * frob;

  bool converged = frob == 0.0;
  for (int sweep = 0; sweep < kMaxEigSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= stop) {
      converged = true;
      break;
    }
    for (Index q = 1; q < n; ++q) {
      for (Index p = 0; p < q; ++p) {
        const double apq = a(p, q);
        if (std::abs(apq) < std::numeric_limits<double>::min()) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- A J on columns p, q, then mirror into rows p, q.
        double* cp = a.col(p).data();
        double* cq = a.col(q).data();
        for (Index k = 0; k < n; ++k) {
          const double x = cp[k];
          const double y = cq[k];
          cp[k] = c * x - s * y;
          cq[k] = s * x + c * y;
        }
        for (Index j = 0; j < n; ++j) {
          a(p, j) = cp[j];
          a(q, j) = cq[j];
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        double* vp = v.col(p).data();
        double* vq = v.col(q).data();
        for (Index k = 0; k < n; ++k) {
          const double x = vp[k];
          const double y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > stop) {
    std::ostringstream msg;
    msg << "sym_eig: Jacobi did not converge after " << kMaxEigSweeps
        << " sweeps; off-diagonal residual " << off_diagonal_norm(a);
    throw NumericError(msg.str());
  }

  const Vector diag = a.diagonal();
  const std::vector<Index> order = argsort(diag, false);
  const Index first = which == Spectrum::kSmallest ? 0 : n - r;

  EigenBasis out;
  out.source_dim = n;
  out.values.resize(r);
  out.vectors.resize(r, n);
  for (Index i = 0; i < r; ++i) {
    const Index src = order[static_cast<size_t>(first + i)];
    out.values(i) = diag(src);
    out.vectors.row(i) = v.col(src).transpose();
    if (needs_flip(out.vectors.row(i))) out.vectors.row(i) *= -1.0;
  }
  return out;
}

SvdFactors compact_svd(const Matrix& a) {
  validate_data(a, "svd input");
  const bool wide = a.rows() < a.cols();
  Matrix b = wide ? Matrix(a.transpose()) : a;
  const Index m = b.cols();
  Matrix j = Matrix::Identity(m, m);
  // Columns below this norm are numerically zero; rotating them against large
  // columns only mixes in rounding noise and stalls the sweep.
  const double negligible =
      static_cast<double>(std::max(b.rows(), m)) * kEps * b.norm();
  const double negligible_sq = negligible * negligible;
  const double orth_tol = std::sqrt(static_cast<double>(b.rows())) * kEps;

  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSvdSweeps && rotated; ++sweep) {
    rotated = false;
    for (Index i = 0; i + 1 < m; ++i) {
      for (Index k = i + 1; k < m; ++k) {
        const double alpha = b.col(i).squaredNorm();
        const double beta = b.col(k).squaredNorm();
        const double gamma = b.col(i).dot(b.col(k));
        if (gamma == 0.0 || alpha <= negligible_sq || beta <= negligible_sq ||
            std::abs(gamma) <= orth_tol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        if (zeta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Vector bi = b.col(i);
        b.col(i) = c * bi - s * b.col(k);
        b.col(k) = s * bi + c * b.col(k);
        const Vector ji = j.col(i);
        j.col(i) = c * ji - s * j.col(k);
        j.col(k) = s * ji + c * j.col(k);
      }
    }
  }
  if (rotated) {
    throw NumericError("compact_svd: one-sided Jacobi did not converge after " +
                       std::to_string(kMaxSvdSweeps) + " sweeps");
  }

  Vector sigma(m);
  for (Index i = 0; i < m; ++i) sigma(i) = b.col(i).norm();
  const std::vector<Index> order = argsort(sigma, true);
  const double smax = m > 0 ? sigma(order[0]) : 0.0;
  const double zero_tol = static_cast<double>(b.rows()) * kEps * smax;

  Matrix q(b.rows(), m);
  Matrix jp(m, m);
  Vector s(m);
  Index filled = 0;
  for (Index i = 0; i < m; ++i) {
    const Index src = order[static_cast<size_t>(i)];
    s(i) = sigma(src);
    jp.col(i) = j.col(src);
    if (s(i) > zero_tol && s(i) > 0.0) {
      q.col(i) = b.col(src) / s(i);
      ++filled;
    }
  }
  complete_orthonormal_columns(q, filled);

  SvdFactors out;
  if (wide) {
    out.u = jp;
    out.v = q.transpose();
  } else {
    out.u = q;
    out.v = jp.transpose();
  }
  out.s = s;
  for (Index i = 0; i < m; ++i) {
    if (needs_flip(out.v.row(i))) {
      out.v.row(i) *= -1.0;
      out.u.col(i) *= -1.0;
    }
  }
  return out;
}

RotationMatrix procrustes_rotation(const Matrix& x, const Matrix& hbar) {
  if (x.rows() != hbar.rows() || x.cols() != hbar.cols()) {
    throw ValidationError("procrustes_rotation: X and Hbar shapes differ");
  }
  const Matrix cross = x * hbar.transpose();
  if (!cross.allFinite()) {
    throw ValidationError("procrustes_rotation: X Hbar^T has non-finite entries");
  }
  const SvdFactors f = compact_svd(cross);
  return f.u * f.v;
}

Matrix orthonormalize_rows(const Matrix& x) {
  if (x.rows() > x.cols()) {
    throw ValidationError("orthonormalize_rows: more rows than columns");
  }
  const SvdFactors f = compact_svd(x);
  if (f.rank() < x.rows()) {
    throw ValidationError("orthonormalize_rows: rows are linearly dependent");
  }
  return f.u * f.v;
}

double row_orthonormality_error(const Matrix& x) {
  return (x * x.transpose() - Matrix::Identity(x.rows(), x.rows()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace ssr
