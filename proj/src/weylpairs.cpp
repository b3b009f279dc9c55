#include "gcakit/weylpairs.hpp"

#include <numeric>
#include <string>

#include "gcakit/errors.hpp"

namespace gcakit {

namespace {

void require_order(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "order must be >= 1, got " + std::to_string(n));
}

}  // namespace

MonomialMatrix shift(std::int64_t n) {
  require_order(n);
  const auto dim = static_cast<std::size_t>(n);
  std::vector<std::size_t> target(dim);
  for (std::size_t c = 0; c < dim; ++c) target[c] = (c + dim - 1) % dim;
  return MonomialMatrix::permutation(std::move(target));
}

MonomialMatrix clock(std::int64_t n) {
  require_order(n);
  std::vector<Phase> phases;
  phases.reserve(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) phases.emplace_back(c, n);
  return MonomialMatrix::diagonal(std::move(phases));
}

WeylPair symmetric_pair(std::int64_t nu) {
  if (nu < 0) throw Error(ErrorCode::BadOrder, "nu must be >= 0");
  const std::int64_t n = 2 * nu + 1;
  std::vector<Phase> phases;
  phases.reserve(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) phases.emplace_back(c - nu, n);
  return {shift(n), MonomialMatrix::diagonal(std::move(phases)), n, 1, Phase::root(n)};
}

WeylPair weyl_pair_for(std::int64_t t, std::int64_t nhat, bool allow_degenerate) {
  if (nhat < 2) throw Error(ErrorCode::BadModulus, "nhat must be at least 2");
  const std::int64_t r = floor_mod(t, nhat);
  if (r == 0) {
    if (!allow_degenerate) {
      throw Error(ErrorCode::DegenerateBlock,
                  "t = " + std::to_string(t) + " vanishes mod " + std::to_string(nhat));
    }
    return {MonomialMatrix::identity(1), MonomialMatrix::identity(1), 1, 0, Phase::one()};
  }
  const std::int64_t g = std::gcd(r, nhat);
  const std::int64_t order = nhat / g;
  const std::int64_t tau = r / g;
  return {shift(order), clock(order).pow(tau), order, tau, Phase::root(order)};
}

DenseMatrix sylvester(std::int64_t n) {
  require_order(n);
  DenseMatrix s(n, n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) s(j, k) = Phase(j * k, n).value();
  }
  return s;
}

DenseMatrix sylvester_inverse(std::int64_t n) {
  require_order(n);
  DenseMatrix s(n, n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) s(j, k) = scale * Phase(-j * k, n).value();
  }
  return s;
}

HermitianLogs hermitian_logs(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::BadOrder, "hermitian_logs needs N >= 2");
  DenseMatrix q = DenseMatrix::Zero(n, n);
  for (std::int64_t j = 0; j < n; ++j) q(j, j) = static_cast<double>(j);
  // shift = S diag(w^k) S^{-1}, so its logarithm is the Fourier conjugate of Q.
  DenseMatrix p = sylvester(n) * q * sylvester_inverse(n);
  DenseMatrix comm = q * p - p * q;
  return {std::move(q), std::move(p), std::move(comm)};
}

}  // namespace gcakit
