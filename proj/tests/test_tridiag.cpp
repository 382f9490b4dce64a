#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tfcompact/pencil.hpp"
#include "tfcompact/tridiag.hpp"

using namespace tfc;

TEST_CASE("min_eigenvalue on hand-checked matrices") {
  CHECK(std::abs(min_eigenvalue(std::vector<double>{1, 0, 1}, 0.0)) < 1e-12);
  // Toeplitz {0, 1/2} of size 3: eigenvalues cos(j pi / 4), j = 1..3.
  CHECK(std::abs(min_eigenvalue(std::vector<double>{0, 0, 0}, 0.5) + std::sqrt(2.0) / 2) < 1e-12);
  // [[0, -1/2], [-1/2, 1]]: (1 - sqrt 2) / 2.
  CHECK(std::abs(min_eigenvalue(std::vector<double>{0, 1}, -0.5) - (1 - std::sqrt(2.0)) / 2) < 1e-12);
  CHECK(min_eigenvalue(std::vector<double>{-3.5}, 2.0) == doctest::Approx(-3.5));
  CHECK_THROWS_AS(min_eigenvalue(std::vector<double>{}, 1.0), std::invalid_argument);
}

TEST_CASE("sturm count brackets the spectrum") {
  const std::vector<double> d{4, 1, 0, 1, 4};
  const auto [lo, hi] = gershgorin_bounds(d, -0.7);
  CHECK(sturm_count(d, -0.7, lo - 1e-9) == 0);
  CHECK(sturm_count(d, -0.7, hi + 1e-9) == d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double v = kth_eigenvalue(d, -0.7, k);
    CHECK(sturm_count(d, -0.7, v - 1e-9) == k);
  }
}

TEST_CASE("degenerate zero coupling returns the center impulse") {
  const Pencil p(4, 0.0, 0.0);
  const auto e = min_eigenpair(p.diag(), p.offdiag());
  CHECK(e.value == 0.0);
  for (std::size_t i = 0; i < e.vector.size(); ++i) CHECK(e.vector[i] == (i == 4 ? 1.0 : 0.0));
}

TEST_CASE("ground state is symmetric, positive and has a small residual") {
  for (double l1 : {0.1, 1.0, 10.0, 100.0}) {
    const Pencil p(100, l1, 0.0);
    const auto e = min_eigenpair(p.diag(), p.offdiag());
    CHECK(e.residual <= 1e-10 * (1 + std::abs(e.value)));
    double nn = 0.0;
    for (double v : e.vector) nn += v * v;
    CHECK(std::abs(std::sqrt(nn) - 1.0) < 1e-12);
    for (std::size_t i = 0; i < e.vector.size(); ++i) {
      CHECK(std::abs(e.vector[i] - e.vector[e.vector.size() - 1 - i]) < 1e-10);
      CHECK(e.vector[i] >= 0.0);
    }
    CHECK(e.vector[100] > 0.0);
    // Residual recomputed independently.
    const auto m = oracle::tridiagonal(p.diag(), p.offdiag());
    double r2 = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
      double acc = -e.value * e.vector[i];
      for (std::size_t j = 0; j < m.n; ++j) acc += m(i, j) * e.vector[j];
      r2 += acc * acc;
    }
    CHECK(std::sqrt(r2) <= 1e-10 * (1 + std::abs(e.value)));
  }
}

TEST_CASE("matches the dense Jacobi oracle on random small pencils") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> half(1, 8);
  std::uniform_real_distribution<double> l1(0.0, 50.0), l2(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Pencil p(half(rng), l1(rng), l2(rng));
    const auto ref = oracle::jacobi_eigen(oracle::tridiagonal(p.diag(), p.offdiag()));
    CHECK(std::abs(min_eigenvalue(p.diag(), p.offdiag()) - ref.values[0]) < 1e-9);
    const auto e = min_eigenpair(p.diag(), p.offdiag());
    CHECK(std::abs(e.value - ref.values[0]) < 1e-9);
    double dot = 0.0;
    for (std::size_t i = 0; i < e.vector.size(); ++i) dot += e.vector[i] * ref.vectors[0][i];
    CHECK(std::abs(std::abs(dot) - 1.0) < 1e-9);
    CHECK(std::abs(kth_eigenvalue(p.diag(), p.offdiag(), p.size() - 1) - ref.values.back()) < 1e-9);
  }
}

TEST_CASE("lambda_min(A - l1 B) is concave in l1") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 40.0);
  auto lmin = [](double l1) {
    const Pencil p(30, l1, 0.0);
    return min_eigenvalue(p.diag(), p.offdiag());
  };
  for (int trial = 0; trial < 100; ++trial) {
    double a = u(rng), c = u(rng);
    if (a > c) std::swap(a, c);
    const double b = 0.5 * (a + c);
    CHECK(lmin(b) >= 0.5 * (lmin(a) + lmin(c)) - 1e-10);
  }
}

TEST_CASE("sign convention with positive coupling") {
  // Pure B on 3 points: ground state (1, -sqrt 2, 1)/2 up to sign; center made positive.
  const auto e = min_eigenpair(std::vector<double>{0, 0, 0}, 0.5);
  CHECK(e.vector[1] > 0.0);
  CHECK(std::abs(e.vector[1] - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(e.vector[0] + 0.5) < 1e-12);
}
