#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssr/errors.hpp"
#include "ssr/matrix_core.hpp"

using ssr::Index;
using ssr::Matrix;
using ssr::Vector;

TEST_SUITE_BEGIN("matrix-core");

TEST_CASE("path graph laplacian eigenvalues match characteristic polynomial roots") {
  Matrix l(3, 3);
  l << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  const auto roots = oracle::char_poly_roots(l, -0.5, 3.5);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(roots[2] == doctest::Approx(3.0).epsilon(1e-9));

  const auto eig = ssr::sym_eig_full(l);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(eig.values(i) - roots[static_cast<size_t>(i)]) < 1e-9);
  }
  // Constant vector spans the null space; positive-peak sign rule applies.
  const double c = 1.0 / std::sqrt(3.0);
  CHECK((eig.vectors.row(0).transpose() - Vector::Constant(3, c)).norm() < 1e-12);
}

TEST_CASE("eigenpairs agree with a reference solver on random symmetric matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 1 + trial * 3;
    const Matrix m = oracle::random_symmetric(n, rng);
    const auto eig = ssr::sym_eig_full(m);
    const Vector ref = oracle::reference_eigenvalues(m);
    CHECK((eig.values - ref).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, m.norm()));
    // Residual and orthonormality.
    const Matrix v = eig.vectors.transpose();
    CHECK((m * v - v * eig.values.asDiagonal()).norm() < 1e-9 * std::max(1.0, m.norm()));
    CHECK(ssr::row_orthonormality_error(eig.vectors) < 1e-12);
    // Ascending order.
    for (Index i = 1; i < n; ++i) CHECK(eig.values(i - 1) <= eig.values(i));
  }
}

TEST_CASE("every eigenvector has a positive largest-magnitude entry") {
  std::mt19937_64 rng(5);
  const Matrix m = oracle::random_symmetric(12, rng);
  const auto eig = ssr::sym_eig_full(m);
  for (Index i = 0; i < eig.vectors.rows(); ++i) {
    Index at = 0;
    eig.vectors.row(i).cwiseAbs().maxCoeff(&at);
    CHECK(eig.vectors(i, at) > 0.0);
  }
}

TEST_CASE("largest spectrum returns the top values in ascending order") {
  std::mt19937_64 rng(7);
  const Matrix m = oracle::random_symmetric(9, rng);
  const Vector ref = oracle::reference_eigenvalues(m);
  const auto top = ssr::sym_eig(m, 3, ssr::Spectrum::kLargest);
  REQUIRE(top.values.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(top.values(i) == doctest::Approx(ref(6 + i)));
  const auto low = ssr::sym_eig(m, 2, ssr::Spectrum::kSmallest);
  CHECK(low.values(0) == doctest::Approx(ref(0)));
  CHECK(low.values(1) == doctest::Approx(ref(1)));
}

TEST_CASE("sym_eig rejects bad input") {
  Matrix asym(2, 2);
  asym << 1, 2, 3, 4;
  CHECK_THROWS_AS(ssr::sym_eig_full(asym), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::sym_eig(Matrix::Identity(3, 3), 0), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::sym_eig(Matrix::Identity(3, 3), 4), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::sym_eig_full(Matrix(2, 3)), ssr::ValidationError);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(ssr::sym_eig_full(bad), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::sym_eig_full(Matrix()), ssr::ValidationError);
}

TEST_CASE("compact svd matches reference singular values and reconstructs") {
  std::mt19937_64 rng(3);
  for (auto [p, n] : {std::pair<Index, Index>{5, 3}, {3, 7}, {6, 6}, {1, 4}, {4, 1}}) {
    const Matrix a = oracle::random_matrix(p, n, rng);
    const auto f = ssr::compact_svd(a);
    const Vector ref = oracle::reference_singular_values(a);
    REQUIRE(f.s.size() == ref.size());
    CHECK((f.s - ref).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, ref(0)));
    CHECK((f.u * f.s.asDiagonal() * f.v - a).norm() < 1e-12 * std::max(1.0, a.norm()));
    CHECK(ssr::row_orthonormality_error(f.v) < 1e-12);
    CHECK(ssr::row_orthonormality_error(f.u.transpose()) < 1e-12);
    CHECK(f.rank() == std::min(p, n));
  }
}

TEST_CASE("compact svd completes zero singular directions orthonormally") {
  Matrix a(3, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 8, 0, 0, 0, 0;
  const auto f = ssr::compact_svd(a);
  CHECK(f.rank() == 1);
  CHECK(ssr::row_orthonormality_error(f.v) < 1e-12);
  CHECK(ssr::row_orthonormality_error(f.u.transpose()) < 1e-12);
  CHECK((f.u * f.s.asDiagonal() * f.v - a).norm() < 1e-12);
  CHECK(f.s(0) == doctest::Approx(std::sqrt(5.0 * 30.0)));
}

TEST_CASE("procrustes on a rotation returns that rotation") {
  Matrix q(2, 2);
  q << 0, -1, 1, 0;
  const Matrix r = ssr::procrustes_rotation(q, Matrix::Identity(2, 2));
  CHECK((r - q).norm() < 1e-14);
}

TEST_CASE("procrustes beats random orthogonal matrices on the trace objective") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix x = oracle::random_matrix(4, 30, rng);
    const Matrix hbar = oracle::random_matrix(4, 30, rng);
    const Matrix r = ssr::procrustes_rotation(x, hbar);
    CHECK(ssr::row_orthonormality_error(r) < 1e-12);
    const double best = (x - r * hbar).squaredNorm();
    for (int k = 0; k < 50; ++k) {
      const Matrix other = oracle::random_orthogonal(4, rng);
      CHECK(best <= (x - other * hbar).squaredNorm() + 1e-9);
    }
  }
  CHECK_THROWS_AS(ssr::procrustes_rotation(Matrix(2, 3), Matrix(3, 3)), ssr::ValidationError);
}

TEST_CASE("orthonormalize_rows gives the nearest row-orthonormal matrix") {
  std::mt19937_64 rng(23);
  const Matrix x = oracle::random_matrix(3, 10, rng);
  const Matrix q = ssr::orthonormalize_rows(x);
  CHECK(ssr::row_orthonormality_error(q) < 1e-12);
  // Polar factor: q^T-side symmetric factor x q^T is symmetric positive.
  const Matrix p = x * q.transpose();
  CHECK((p - p.transpose()).norm() < 1e-10);
  CHECK(oracle::reference_eigenvalues(p).minCoeff() > 0.0);
  CHECK_THROWS_AS(ssr::orthonormalize_rows(Matrix(4, 2)), ssr::ValidationError);
  Matrix dep(2, 3);
  dep << 1, 2, 3, 2, 4, 6;
  CHECK_THROWS_AS(ssr::orthonormalize_rows(dep), ssr::ValidationError);
}

TEST_CASE("zero matrix and disconnected graph spectra") {
  const auto z = ssr::sym_eig_full(Matrix::Zero(3, 3));
  CHECK(z.values.isZero());
  CHECK(ssr::row_orthonormality_error(z.vectors) < 1e-15);
  Matrix w = Matrix::Zero(4, 4);
  w(0, 1) = w(1, 0) = 1.0;
  w(2, 3) = w(3, 2) = 2.0;
  Matrix l = -w;
  l.diagonal() = w.rowwise().sum();
  const auto two = ssr::sym_eig(l, 2);
  CHECK(std::abs(two.values(0)) < 1e-14);
  CHECK(std::abs(two.values(1)) < 1e-14);
}

TEST_CASE("svd of simple matrices") {
  CHECK(ssr::compact_svd(Matrix::Identity(2, 2)).s.isApproxToConstant(1.0));
  Matrix a = Matrix::Zero(2, 3);
  a(0, 0) = 3.0;
  a(1, 1) = 2.0;
  const auto f = ssr::compact_svd(a);
  CHECK(f.s(0) == doctest::Approx(3.0));
  CHECK(f.s(1) == doctest::Approx(2.0));
}

TEST_CASE("truncated svd residual is the discarded energy and beats random factorizations") {
  std::mt19937_64 rng(29);
  const Matrix a = oracle::random_matrix(5, 8, rng);
  const auto f = ssr::compact_svd(a);
  const Matrix approx = f.u.leftCols(2) * f.s.head(2).asDiagonal() * f.v.topRows(2);
  const double residual = (a - approx).squaredNorm();
  const Vector ref = oracle::reference_singular_values(a);
  CHECK(residual == doctest::Approx(ref.tail(3).squaredNorm()).epsilon(1e-12));
  for (int t = 0; t < 100; ++t) {
    const Matrix d = oracle::random_matrix(5, 2, rng);
    // Best coefficients for this dictionary, by least squares.
    const Matrix x = d.colPivHouseholderQr().solve(a);
    CHECK(residual <= (a - d * x).squaredNorm() + 1e-12);
  }
}

TEST_CASE("procrustes self-alignment and exact recovery") {
  std::mt19937_64 rng(37);
  const Matrix x = oracle::random_matrix(4, 12, rng);
  CHECK((ssr::procrustes_rotation(x, x) - Matrix::Identity(4, 4)).norm() < 1e-10);
  const Matrix r0 = oracle::random_orthogonal(4, rng);
  CHECK((ssr::procrustes_rotation(r0 * x, x) - r0).norm() < 1e-10);
}

TEST_CASE("procrustes with a rank-deficient cross product still returns a rotation") {
  Matrix x = Matrix::Identity(3, 5);
  Matrix hbar = Matrix::Zero(3, 5);
  hbar(0, 0) = 1.0;
  const Matrix r = ssr::procrustes_rotation(x, hbar);
  CHECK(ssr::row_orthonormality_error(r) < 1e-12);
  CHECK(r(0, 0) == doctest::Approx(1.0));
  CHECK(r == ssr::procrustes_rotation(x, hbar));
}

TEST_SUITE_END();
