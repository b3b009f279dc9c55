#include <doctest.h>

#include <algorithm>
#include <random>

#include "gcakit/dense.hpp"
#include "gcakit/errors.hpp"
#include "gcakit/monomial.hpp"
#include "gcakit/phase.hpp"
#include "oracles.hpp"

using namespace gcakit;

TEST_CASE("phase normalizes to lowest terms in [0, den)") {
  const Phase p(-3, 12);
  CHECK(p.num() == 3);
  CHECK(p.den() == 4);
  CHECK(Phase(5, 5).is_one());
  CHECK(Phase(2, 4) == Phase(1, 2));
  CHECK_THROWS_AS(Phase(1, 0), Error);
}

TEST_CASE("phase arithmetic matches complex exponentials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 24);
  for (int trial = 0; trial < 200; ++trial) {
    const Phase a(num(rng), den(rng));
    const Phase b(num(rng), den(rng));
    const auto k = num(rng) % 7;
    CHECK(std::abs((a * b).value() - a.value() * b.value()) < 1e-12);
    CHECK(std::abs((a / b).value() - a.value() / b.value()) < 1e-12);
    CHECK(std::abs(a.pow(k).value() - std::pow(a.value(), static_cast<int>(k))) < 1e-10);
    CHECK(std::abs(a.value() - oracle::root(a.num(), a.den())) < 1e-14);
  }
}

TEST_CASE("quarter phases are exact") {
  CHECK(Phase(1, 4).value() == Complex(0.0, 1.0));
  CHECK(Phase(1, 2).value() == Complex(-1.0, 0.0));
  CHECK(Phase(3, 4).value() == Complex(0.0, -1.0));
  CHECK(Phase(1, 4).to_string() == "i");
  CHECK(Phase(1, 3).to_string() == "w3^1");
}

TEST_CASE("from_complex recovers roots of unity") {
  for (std::int64_t den = 1; den <= 30; ++den) {
    for (std::int64_t num = 0; num < den; ++num) {
      const auto p = Phase::from_complex(oracle::root(num, den));
      REQUIRE(p.has_value());
      CHECK(*p == Phase(num, den));
    }
  }
  CHECK_FALSE(Phase::from_complex(Complex(0.5, 0.5)).has_value());
  CHECK_FALSE(Phase::from_complex(std::polar(1.0, std::sqrt(2.0))).has_value());
}

TEST_CASE("phase sums detect vanishing root sums exactly") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    PhaseSum s;
    for (std::int64_t k = 0; k < n; ++k) s.add(Phase(k, n));
    CHECK(s.is_zero());
  }
  PhaseSum mixed;  // 1 + w3 + w3^2 + (-1) + 1
  mixed.add(Phase(0, 3));
  mixed.add(Phase(1, 3));
  mixed.add(Phase(2, 3));
  mixed.add(Phase(1, 2));
  mixed.add(Phase::one());
  CHECK(mixed.equals_integer(0));
  PhaseSum three;
  three.add(Phase::one(), 3);
  CHECK(three.equals_integer(3));
  CHECK_FALSE(three.is_zero());
  PhaseSum near;  // 1 + w5 is not an integer
  near.add(Phase::one());
  near.add(Phase(1, 5));
  CHECK_FALSE(near.equals_integer(1));
  CHECK_FALSE(near.equals_integer(2));
}

TEST_CASE("monomial products agree with dense products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto random_monomial = [&] {
      std::vector<std::size_t> target(n);
      for (std::size_t i = 0; i < n; ++i) target[i] = i;
      std::shuffle(target.begin(), target.end(), rng);
      std::vector<Phase> phases;
      for (std::size_t i = 0; i < n; ++i) phases.emplace_back(static_cast<std::int64_t>(rng() % 12), 12);
      return MonomialMatrix(target, phases);
    };
    const auto a = random_monomial();
    const auto b = random_monomial();
    const oracle::Mat da = a.to_dense();
    const oracle::Mat db = b.to_dense();
    CHECK(oracle::maxdiff((a * b).to_dense(), da * db) < 1e-12);
    CHECK(oracle::maxdiff(a.adjoint().to_dense(), da.adjoint()) < 1e-12);
    CHECK(oracle::maxdiff(a.pow(3).to_dense(), da * da * da) < 1e-12);
    CHECK(oracle::maxdiff(a.pow(-2).to_dense(), oracle::mpow(da, -2)) < 1e-10);
    CHECK(oracle::maxdiff(tensor(a, b).to_dense(), oracle::kron(da, db)) < 1e-12);
    CHECK(std::abs(a.trace().value() - da.trace()) < 1e-12);
    CHECK(std::abs(trace_inner(a, b).value() - (da.adjoint() * db).trace()) < 1e-12);
    CHECK((a * a.adjoint()).is_identity());
  }
}

TEST_CASE("monomial validation and scalar detection") {
  CHECK_THROWS_AS(MonomialMatrix({0, 0}, {Phase::one(), Phase::one()}), Error);
  CHECK_THROWS_AS(MonomialMatrix({0, 1}, {Phase::one()}), Error);
  const auto s = MonomialMatrix::scalar(3, Phase(1, 3));
  REQUIRE(s.scalar_value().has_value());
  CHECK(*s.scalar_value() == Phase(1, 3));
  CHECK_FALSE(MonomialMatrix::diagonal({Phase::one(), Phase(1, 2)}).scalar_value().has_value());
  const auto x = MonomialMatrix::permutation({1, 0});
  const auto z = MonomialMatrix::diagonal({Phase::one(), Phase(1, 2)});
  const auto r = (x * z).ratio_to(z * x);
  REQUIRE(r.has_value());
  CHECK(*r == Phase(1, 2));
  try {
    (void)mat_mul(MonomialMatrix::identity(2), MonomialMatrix::identity(3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("dense helpers") {
  const DenseMatrix a = oracle::s2();
  CHECK(is_hermitian(a));
  CHECK(is_unitary(a));
  CHECK(std::abs(trace_inner(a, a) - Complex(2.0, 0.0)) < 1e-15);
  const auto fit = fit_unit_scalar(Complex(0.0, 1.0) * a, a);
  CHECK(std::abs(fit.zeta - Complex(0.0, 1.0)) < 1e-15);
  CHECK(fit.residual < 1e-15);
  CHECK_THROWS_AS(mat_mul(DenseMatrix::Zero(2, 3), DenseMatrix::Zero(2, 3)), Error);
  CHECK(std::string(to_string(ErrorCode::NotAntisymmetric)) == "NotAntisymmetric");
}
