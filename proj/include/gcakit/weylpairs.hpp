#pragma once

#include <cstdint>

#include "gcakit/dense.hpp"
#include "gcakit/monomial.hpp"

namespace gcakit {

/// Pair (a, b) with a b = omega^tau b a and a^order = b^order = I.
struct WeylPair {
  MonomialMatrix a;  // shift
  MonomialMatrix b;  // clock
  std::int64_t order = 1;
  std::int64_t tau = 0;
  Phase omega;  // exp(2 pi i / order)

  Phase commutator() const { return omega.pow(tau); }
};

/// Cyclic shift: ones at (i, i+1) and (N-1, 0).
MonomialMatrix shift(std::int64_t n);
/// diag(1, w, ..., w^{N-1}), w = exp(2 pi i / N).
MonomialMatrix clock(std::int64_t n);

/// Odd-dimensional pair with clock diag(w^-nu, ..., w^nu), N = 2 nu + 1.
WeylPair symmetric_pair(std::int64_t nu);

/// Pair realizing a b = exp(2 pi i t / nhat) b a in dimension
/// nhat / gcd(t, nhat), returned as (shift, clock^tau). A t that vanishes mod
/// nhat throws DegenerateBlock unless allow_degenerate is set, in which case
/// the 1x1 commuting pair comes back.
WeylPair weyl_pair_for(std::int64_t t, std::int64_t nhat, bool allow_degenerate = false);

/// S[j][k] = w^{jk}.
DenseMatrix sylvester(std::int64_t n);
/// S^{-1}[j][k] = w^{-jk} / N.
DenseMatrix sylvester_inverse(std::int64_t n);

/// Hermitian logarithms of clock and shift: clock = exp(2 pi i Q / N) with
/// Q = diag(0, ..., N-1), shift = exp(2 pi i P / N) with P = S Q S^{-1}.
struct HermitianLogs {
  DenseMatrix q;
  DenseMatrix p;
  DenseMatrix commutator;  // [Q, P]
};
HermitianLogs hermitian_logs(std::int64_t n);

}  // namespace gcakit
