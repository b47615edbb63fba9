#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssr/data.hpp"
#include "ssr/errors.hpp"
#include "ssr/eval.hpp"
#include "ssr/nscrt.hpp"

using ssr::Index;
using ssr::Matrix;

TEST_SUITE_BEGIN("nscrt");

TEST_CASE("default lambda scales with one over root n") {
  CHECK(ssr::default_lambda(100) == doctest::Approx(0.06));
  CHECK(ssr::default_lambda(1) == doctest::Approx(0.6));
}

TEST_CASE("truncation keeps entries at or above lambda") {
  Matrix h(2, 3);
  h << 0.5, 0.2, -0.9, 0.3, 0.31, 0.0;
  const Matrix t = ssr::truncate(h, 0.3);
  Matrix expect(2, 3);
  expect << 0.5, 0.0, 0.0, 0.3, 0.31, 0.0;
  CHECK(t == expect);
  Matrix g(2, 2);
  g << 0.5, -0.5, 0.3, 0.9;
  Matrix g_expect(2, 2);
  g_expect << 0.5, 0.0, 0.0, 0.9;
  CHECK(ssr::truncate(g, 0.4) == g_expect);
  CHECK(ssr::truncate(g, 0.95).isZero());
  CHECK_THROWS_AS(ssr::truncate(h, 0.0), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::truncate(h, 1.0), ssr::ValidationError);
}

TEST_CASE("objective counts squared residual plus lambda squared per nonzero") {
  const Matrix x = Matrix::Identity(2, 3);
  Matrix hbar = Matrix::Zero(2, 3);
  hbar(0, 0) = 1.0;
  CHECK(ssr::nscrt_objective(x, Matrix::Identity(2, 2), hbar, 0.5) == doctest::Approx(1.25));
}

TEST_CASE("a rotated indicator is recovered exactly") {
  const Matrix h_star = ssr::normalized_indicator({3, 5, 4});
  const Matrix rot = ssr::random_rotation(3, 42);
  const Matrix x = rot * h_star;
  const auto codes = ssr::nscrt(x);
  CHECK(codes.converged);
  CHECK(ssr::rotation_recovery_score(codes.rotation, rot) == doctest::Approx(1.0).epsilon(1e-9));
  // |H| equals the indicator up to row order; a row may come back negated.
  const Matrix mag = codes.h.cwiseAbs();
  for (Index i = 0; i < 3; ++i) {
    double best = 1e9;
    for (Index k = 0; k < 3; ++k) best = std::min(best, (mag.row(i) - h_star.row(k)).norm());
    CHECK(best < 1e-10);
  }
}

TEST_CASE("a normalized indicator is a fixed point") {
  const Matrix x = ssr::normalized_indicator({4, 6, 5});
  const auto codes = ssr::nscrt(x);
  CHECK(codes.converged);
  CHECK(codes.iterations <= 2);
  CHECK((codes.rotation - Matrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((codes.h - x).norm() < 1e-12);
}

TEST_CASE("noiseless two-way recovery from a random angle") {
  // Near a half turn R^T X starts with no entry above lambda, and the solver
  // stops at once with converged = false. Every other angle must be exact.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  const Matrix h_star = ssr::normalized_indicator({7, 9});
  int recovered = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double t = angle(rng);
    Matrix rot(2, 2);
    rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    const Matrix x = rot * h_star;
    const auto codes = ssr::nscrt(x);
    if (ssr::truncate(x, ssr::default_lambda(16)).isZero()) {
      CHECK_FALSE(codes.converged);
      CHECK(codes.iterations == 1);
    } else {
      CHECK(std::abs(ssr::rotation_recovery_score(codes.rotation, rot) - 1.0) <= 1e-8);
      ++recovered;
    }
  }
  CHECK(recovered >= 160);
}

TEST_CASE("codes keep orthonormal rows and the input's Gram matrix") {
  std::mt19937_64 rng(10);
  const Matrix x = ssr::orthonormalize_rows(oracle::random_matrix(5, 40, rng));
  const auto codes = ssr::nscrt(x);
  CHECK(ssr::row_orthonormality_error(codes.h) < 1e-8);
  CHECK((codes.h.transpose() * codes.h - x.transpose() * x).norm() < 1e-8);
  CHECK(((codes.hbar.array() == 0.0) || (codes.hbar.array() >= codes.lambda)).all());
  const auto again = ssr::nscrt(x);
  CHECK(again.h == codes.h);
  CHECK(again.iterations == codes.iterations);
}

TEST_CASE("objective trace never increases and outputs are consistent") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix x = ssr::orthonormalize_rows(oracle::random_matrix(4, 60, rng));
    const auto codes = ssr::nscrt(x, {0.0, 200, 0.0});
    for (size_t i = 1; i < codes.objective_trace.size(); ++i) {
      CHECK(codes.objective_trace[i] <= codes.objective_trace[i - 1] + 1e-10);
    }
    CHECK(ssr::row_orthonormality_error(codes.rotation) < 1e-10);
    CHECK((codes.h - codes.rotation.transpose() * x).norm() < 1e-12);
    CHECK(codes.hbar == ssr::truncate(codes.h, codes.lambda));
    CHECK(codes.iterations <= 200);
  }
}

TEST_CASE("all-negative start returns without converging") {
  const Matrix x = -ssr::normalized_indicator({2, 2});
  const auto codes = ssr::nscrt(x);
  CHECK_FALSE(codes.converged);
  CHECK(codes.iterations == 1);
  CHECK(codes.hbar.isZero());
}

TEST_CASE("nscrt input validation") {
  CHECK_THROWS_AS(ssr::nscrt(Matrix::Identity(3, 2)), ssr::ValidationError);
  Matrix x = Matrix::Identity(2, 4) * 2.0;
  CHECK_THROWS_AS(ssr::nscrt(x), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::nscrt(Matrix::Identity(2, 4), {1.5, 10, 0.01}), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::nscrt(Matrix::Identity(2, 4), {0.0, 0, 0.01}), ssr::ValidationError);
  CHECK_THROWS_AS(ssr::nscrt(Matrix::Identity(2, 4), {0.0, 10, -1.0}), ssr::ValidationError);
}

TEST_SUITE_END();
