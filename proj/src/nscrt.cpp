#include "ssr/nscrt.hpp"

#include <cmath>
#include <sstream>

#include "ssr/errors.hpp"

namespace ssr {
namespace {

constexpr double kOrthonormalTol = 1e-6;

// Objective reduction that truncation at lambda achieves on codes h.
double truncation_gain(const Matrix& h, double lambda) {
  const double l2 = lambda * lambda;
  return (h.array() >= lambda).select(h.array().square() - l2, 0.0).sum();
}

// Procrustes step. When X Hbar^T is rank deficient, each zero singular
// direction leaves the sign of its left vector free; keep the sign whose codes
// the next truncation can use best.
RotationMatrix procrustes_step(const Matrix& x, const Matrix& hbar, double lambda) {
  const SvdFactors f = compact_svd(x * hbar.transpose());
  RotationMatrix r = f.u * f.v;
  const Index rank = f.rank();
  if (rank == r.rows()) return r;
  double gain = truncation_gain(r.transpose() * x, lambda);
  for (Index k = rank; k < r.rows(); ++k) {
    RotationMatrix flipped = r - 2.0 * f.u.col(k) * f.v.row(k);
    const double g = truncation_gain(flipped.transpose() * x, lambda);
    if (g > gain) {
      r = std::move(flipped);
      gain = g;
    }
  }
  return r;
}

}  // namespace

double default_lambda(Index n) {
  return 0.6 / std::sqrt(static_cast<double>(n));
}

Matrix truncate(const Matrix& h, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw ValidationError("truncate: lambda must lie in (0, 1)");
  }
  return (h.array() >= lambda).select(h, 0.0);
}

double nscrt_objective(const Matrix& x, const RotationMatrix& r,
                       const Matrix& hbar, double lambda) {
  const double nnz = static_cast<double>((hbar.array() != 0.0).count());
  return (x - r * hbar).squaredNorm() + lambda * lambda * nnz;
}

SparseCodes nscrt(const Matrix& x, const NscrtOptions& options) {
  validate_data(x, "nscrt input");
  if (x.rows() > x.cols()) {
    throw ValidationError("nscrt: X must have at most as many rows as columns");
  }
  const double err = row_orthonormality_error(x);
  if (err > kOrthonormalTol) {
    std::ostringstream msg;
    msg << "nscrt: X rows are not orthonormal (max |XX^T - I| = " << err << ")";
    throw ValidationError(msg.str());
  }
  if (options.max_iter < 1) throw ValidationError("nscrt: max_iter must be >= 1");
  if (!(options.tol >= 0.0)) throw ValidationError("nscrt: tol must be >= 0");

  const Index r = x.rows();
  const double lambda =
      options.lambda > 0.0 ? options.lambda : default_lambda(x.cols());
  if (lambda >= 1.0) throw ValidationError("nscrt: lambda must lie in (0, 1)");

  SparseCodes out;
  out.lambda = lambda;
  out.rotation = RotationMatrix::Identity(r, r);
  const double root_r = std::sqrt(static_cast<double>(r));

  for (int it = 1; it <= options.max_iter; ++it) {
    out.iterations = it;
    const Matrix h = out.rotation.transpose() * x;
    Matrix hbar = truncate(h, lambda);
    if ((hbar.array() == 0.0).all()) {
      // Procrustes is undefined at Hbar = 0; the caller should lower lambda.
      out.h = h;
      out.hbar = std::move(hbar);
      out.converged = false;
      return out;
    }
    out.objective_trace.push_back(nscrt_objective(x, out.rotation, hbar, lambda));
    RotationMatrix next = procrustes_step(x, hbar, lambda);
    const double delta = (next - out.rotation).norm() / root_r;
    out.rotation = std::move(next);
    if (delta <= options.tol) {
      out.converged = true;
      break;
    }
  }
  out.h = out.rotation.transpose() * x;
  out.hbar = truncate(out.h, lambda);
  return out;
}

}  // namespace ssr
