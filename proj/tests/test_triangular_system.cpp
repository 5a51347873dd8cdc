#include "doctest.h"

#include <random>

#include "gessel/triangular_system.hpp"
#include "gessel/walk_dp.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace gessel;

namespace {

DenseMatrix to_dense(const std::vector<std::vector<mpz_class>>& m) {
  DenseMatrix d(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) d(r, c) = m[r][c];
  }
  return d;
}

}  // namespace

TEST_CASE("rho is a monotone bijection") {
  CHECK(rho(0, 0) == 0);
  CHECK(rho(1, 1) == kRho11);
  CHECK(rho(3, 3) == 24);
  CHECK(rho(13, 13) == 364);
  std::vector<bool> seen(static_cast<std::size_t>(rho(61, 0)), false);
  for (std::int64_t i = 0; i <= 60; ++i) {
    for (std::int64_t j = 0; i + j <= 60; ++j) {
      const auto n = rho(i, j);
      REQUIRE(n < static_cast<std::int64_t>(seen.size()));
      CHECK_FALSE(seen[static_cast<std::size_t>(n)]);
      seen[static_cast<std::size_t>(n)] = true;
      CHECK(rho_inv(n) == std::pair{i, j});
      if (i + j < 60) {
        CHECK(rho(i, j) <= rho(i + 1, j));
        CHECK(rho(i, j) <= rho(i, j + 1));
      }
    }
  }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("coefficient_c") {
  for (int u = 0; u <= 8; ++u) {
    for (int v = 0; v <= 8; ++v) CHECK(coefficient_c(u, v, u, v) == 1);
  }
  CHECK(coefficient_c(1, 1, 2, 0) == 0);
  CHECK(coefficient_c(1, 2, 1, 1) == -1);
  for (int u = 0; u <= 6; ++u) {
    for (int v = 0; v <= 6; ++v) {
      for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
          if (i > u || j > v) CHECK(coefficient_c(u, v, i, j) == 0);
        }
      }
    }
  }
}

TEST_CASE("system matrix is unit lower triangular") {
  for (std::int64_t n = 0; n < 120; ++n) {
    CHECK(system_entry(n, n) == 1);
    for (std::int64_t k = n + 1; k < 120; ++k) CHECK(system_entry(n, k) == 0);
  }
}

TEST_CASE("forward substitution") {
  const TriSystem sys = solve_forward(60);
  CHECK(sys.x(4) == 1);
  CHECK(sys.x(24) == 2);
  for (int k = 0; k < 4; ++k) CHECK(sys.x(k) == 0);
  for (std::int64_t k = 0; k <= 60; ++k) {
    const auto [i, j] = rho_inv(k);
    CHECK(sys.x(k) == f_entry(static_cast<int>(i), static_cast<int>(j)));
  }
  // A x = b row by row
  for (std::int64_t n = 0; n <= 60; ++n) {
    ExactInt acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) acc += sys.a(n, k) * sys.x(k);
    CHECK(acc == TriSystem::b(n));
  }
}

TEST_CASE("Hessenberg window for k = 24") {
  const HessenbergMatrix h = hessenberg_for(24);
  REQUIRE(h.size() == 20);
  for (std::size_t r = 0; r < 20; ++r) {
    for (std::size_t c = 0; c < 20; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(h(r, c) == reference::kH24[r][c]);
    }
  }
  CHECK(h(3, 0) == -1);
  CHECK(hessenberg_det(h) == 2);
  CHECK(hessenberg_for(5).size() == 1);
  CHECK(hessenberg_for(4).size() == 0);
  CHECK_THROWS_AS(hessenberg_for(3), Error);
}

TEST_CASE("Hessenberg determinant") {
  DenseMatrix one(1, 1);
  one(0, 0) = 7;
  CHECK(hessenberg_det(HessenbergMatrix(one)) == 7);
  CHECK(hessenberg_det(HessenbergMatrix(DenseMatrix(0, 0))) == 1);

  DenseMatrix diag(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    diag(r, r) = static_cast<long>(r + 2);
    if (r + 1 < 4) diag(r, r + 1) = 1;
  }
  // lower part zero except the diagonal: tridiagonal with zero subdiagonal
  CHECK(hessenberg_det(HessenbergMatrix(diag)) == 2 * 3 * 4 * 5);

  DenseMatrix not_hessenberg(3, 3);
  not_hessenberg(0, 2) = 1;
  CHECK_THROWS_AS(HessenbergMatrix{not_hessenberg}, Error);

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    DenseMatrix m(n, n);
    std::vector<std::vector<mpz_class>> plain(n, std::vector<mpz_class>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        int v = 0;
        if (c <= r) v = dist(rng);
        if (c == r + 1) v = 1;
        m(r, c) = v;
        plain[r][c] = v;
      }
    }
    CHECK(hessenberg_det(HessenbergMatrix(m)) == oracle::cofactor_det(plain));
  }
}

TEST_CASE("determinants recover the solution vector") {
  const TriSystem sys = solve_forward(80);
  for (std::int64_t k = 0; k <= 80; ++k) CHECK(solution_via_determinant(k) == sys.x(k));
}

TEST_CASE("Gessel numbers as determinants") {
  CHECK(gessel_via_determinant(0) == 1);
  CHECK(gessel_via_determinant(1) == 2);
  CHECK(gessel_via_determinant(3) == 85);
}

TEST_CASE("multiple-sum inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const DenseMatrix a = to_dense(oracle::random_unit_lower(n, 4, rng));
    const DenseMatrix inv = unit_lower_inverse(a);
    for (std::size_t k = 1; k < n; ++k) {
      CHECK(inverse_entry_multisum(k, k - 1, a) == -a(k, k - 1));
      for (std::size_t m = 0; m < k; ++m) CHECK(inverse_entry_multisum(k, m, a) == inv(k, m));
    }
  }
  const DenseMatrix a = system_matrix(25);
  CHECK(inverse_entry_multisum(24, 4, a, 24) == 2);
  CHECK_THROWS_AS(inverse_entry_multisum(24, 4, a), Error);
  CHECK_THROWS_AS(inverse_entry_multisum(3, 3, a), Error);
}

TEST_CASE("universal sequences") {
  for (int i = 1; i <= 8; ++i) {
    const auto seq = universal_sequence(i);
    const auto& expected = reference::kUniversalSequences[static_cast<std::size_t>(i - 1)];
    REQUIRE(seq.size() == expected.size());
    for (std::size_t t = 0; t < seq.size(); ++t) CHECK(seq[t] == expected[t]);
  }
  for (int i = 1; i <= 10; ++i) {
    const auto seq = universal_sequence(i);
    CHECK(seq.size() == static_cast<std::size_t>(2 * i));
    CHECK(seq.front() == 1);
    CHECK(seq.back() == catalan(i - 1));
  }
  CHECK_THROWS_AS(universal_sequence(0), Error);
}
