#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <Eigen/Dense>

#include "gcakit/errors.hpp"
#include "gcakit/skewnormal.hpp"

using namespace gcakit;

namespace {

IntMatrix random_antisymmetric(int n, std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  IntMatrix t = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      t(j, k) = dist(rng);
      t(k, j) = -t(j, k);
    }
  }
  return t;
}

IntMatrix clifford_t(int n) {
  IntMatrix t = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      t(j, k) = 1;
      t(k, j) = -1;
    }
  }
  return t;
}

// Independent check: U T' U^T against T modulo nhat with plain loops, and
// |det U| = 1 through a floating point determinant (entries stay small).
bool congruent_by_hand(const IntMatrix& t, const SkewNormalForm& f) {
  const int n = f.n;
  IntMatrix normal = IntMatrix::Zero(n, n);
  for (int i = 0; i < f.s; ++i) {
    normal(2 * i, 2 * i + 1) = f.t_inv[static_cast<std::size_t>(i)];
    normal(2 * i + 1, 2 * i) = -f.t_inv[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      long double acc = 0;
      std::int64_t exact = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          exact += f.u(j, a) * normal(a, b) * f.u(k, b);
          acc += static_cast<long double>(f.u(j, a)) * normal(a, b) * f.u(k, b);
        }
      }
      if (std::fabs(static_cast<double>(acc - exact)) > 0.5) return false;  // overflow guard
      if ((exact - t(j, k)) % f.nhat != 0) return false;
    }
  }
  const double det = f.u.cast<double>().determinant();
  return std::abs(std::abs(det) - 1.0) < 1e-6;
}

// Invariant factors of Z_{a_1} x ... x Z_{a_r}: prime power decomposition
// regrouped into a divisibility chain, trivial factors dropped.
std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& orders) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (auto o : orders) {
    for (std::int64_t p = 2; o > 1; ++p) {
      std::int64_t pk = 1;
      while (o % p == 0) {
        o /= p;
        pk *= p;
      }
      if (pk > 1) by_prime[p].push_back(pk);
    }
  }
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::int64_t> out(len, 1);
  for (const auto& [p, v] : by_prime) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("validate_tmatrix reduces to symmetric residues") {
  IntMatrix raw(2, 2);
  raw << 0, 5, -5, 0;
  const TMatrix t = validate_tmatrix(raw, 4);
  CHECK(t(0, 1) == 1);
  CHECK(t(1, 0) == -1);
  raw << 0, 2, -2, 0;
  CHECK(validate_tmatrix(raw, 4)(0, 1) == 2);  // upper end of (-2, 2]
  raw << 0, 3, 1, 0;  // 3 + 1 = 0 mod 4: accepted
  CHECK(validate_tmatrix(raw, 4)(0, 1) == -1);
}

TEST_CASE("validate_tmatrix rejects bad data") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  IntMatrix raw(2, 2);
  raw << 0, 1, 0, 0;
  CHECK(code_of([&] { (void)validate_tmatrix(raw, 3); }) == ErrorCode::NotAntisymmetric);
  raw << 1, 0, 0, 0;
  CHECK(code_of([&] { (void)validate_tmatrix(raw, 3); }) == ErrorCode::NotAntisymmetric);
  CHECK(code_of([&] { (void)validate_tmatrix(IntMatrix::Zero(2, 2), 1); }) == ErrorCode::BadModulus);
  CHECK(code_of([&] { (void)validate_tmatrix(IntMatrix::Zero(2, 3), 2); }) == ErrorCode::DimensionMismatch);
  CHECK_NOTHROW((void)validate_tmatrix(clifford_t(6), 2));
}

TEST_CASE("zero matrix has no blocks and U = I") {
  for (int n = 1; n <= 5; ++n) {
    const auto f = skew_normal_form(validate_tmatrix(IntMatrix::Zero(n, n), 2));
    CHECK(f.s == 0);
    CHECK(f.u == IntMatrix::Identity(n, n));
  }
}

TEST_CASE("Clifford T gives floor(n/2) unit blocks") {
  for (int n = 2; n <= 9; ++n) {
    const TMatrix t = validate_tmatrix(clifford_t(n), 2);
    const auto f = skew_normal_form(t);
    CHECK(f.s == n / 2);
    for (auto x : f.t_inv) CHECK(x == 1);
    CHECK(verify_congruence(t, f).overall());
    CHECK(congruent_by_hand(t.entries(), f));
  }
}

TEST_CASE("printed Clifford U matrices are accepted as witnesses") {
  // Row 2j-1 (2j) carries 1 in the first (second) column of block m-j+1 and
  // (-1, 1) in every later block; odd n appends a row of (-1, 1) pairs and 1.
  for (int n = 2; n <= 9; ++n) {
    const int m = n / 2;
    IntMatrix u = IntMatrix::Zero(n, n);
    for (int j = 1; j <= m; ++j) {
      const int b = m - j + 1;
      u(2 * j - 2, 2 * b - 2) = 1;
      u(2 * j - 1, 2 * b - 1) = 1;
      for (int later = b + 1; later <= m; ++later) {
        for (int r : {2 * j - 2, 2 * j - 1}) {
          u(r, 2 * later - 2) = -1;
          u(r, 2 * later - 1) = 1;
        }
      }
    }
    if (n % 2 == 1) {
      for (int b = 1; b <= m; ++b) {
        u(n - 1, 2 * b - 2) = -1;
        u(n - 1, 2 * b - 1) = 1;
      }
      u(n - 1, n - 1) = 1;
    }
    SkewNormalForm f;
    f.n = n;
    f.s = m;
    f.nhat = 2;
    f.t_inv.assign(static_cast<std::size_t>(m), 1);
    f.u = u;
    const TMatrix t = validate_tmatrix(clifford_t(n), 2);
    const auto report = verify_congruence(t, f);
    CHECK_MESSAGE(report.overall(), "n = " << n);
    CHECK(congruent_by_hand(t.entries(), f));
  }
}

TEST_CASE("verify_congruence flags a non-unimodular U") {
  const TMatrix t = validate_tmatrix(clifford_t(2), 2);
  SkewNormalForm f = skew_normal_form(t);
  f.u = IntMatrix::Identity(2, 2);
  f.u(0, 0) = 2;
  const auto report = verify_congruence(t, f);
  REQUIRE(report.find("unimodular") != nullptr);
  CHECK_FALSE(report.find("unimodular")->pass);
  CHECK_FALSE(report.overall());
}

TEST_CASE("random T matrices reduce correctly") {
  std::mt19937_64 rng(2024);
  int beyond_bound = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const std::int64_t nhat = 2 + static_cast<std::int64_t>(rng() % 11);
    const TMatrix t = validate_tmatrix(random_antisymmetric(n, -20, 20, rng), nhat);
    const auto f = skew_normal_form(t);
    CHECK(f.s <= n / 2);
    for (auto x : f.t_inv) {
      CHECK(x >= 1);
      CHECK(x < nhat);
    }
    const auto report = verify_congruence(t, f);
    CHECK_MESSAGE(report.overall(), "trial " << trial);
    CHECK(congruent_by_hand(t.entries(), f));
    if (f.u.cwiseAbs().maxCoeff() > nhat) ++beyond_bound;

    // Normal form invariants survive a second pass through U T' U^T.
    const auto again = skew_normal_form(validate_tmatrix(f.u * f.normal_form() * f.u.transpose(), nhat));
    CHECK(invariant_factors(again.block_orders()) == invariant_factors(f.block_orders()));
  }
  MESSAGE("U matrices exceeding |u| <= nhat: " << beyond_bound << " of 300");
}

TEST_CASE("integer determinant") {
  IntMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 1;
  CHECK(integer_determinant(m) == 2 * (3 - 2) - 0 + 1 * (1 - 3));
  CHECK(integer_determinant(IntMatrix::Identity(5, 5)) == 1);
  IntMatrix swap = IntMatrix::Zero(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(integer_determinant(swap) == -1);
}
