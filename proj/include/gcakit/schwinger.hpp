#pragma once

#include "gcakit/dense.hpp"
#include "gcakit/monomial.hpp"
#include "gcakit/report.hpp"

namespace gcakit {

struct SchwingerCoeffs {
  std::int64_t n = 0;
  DenseMatrix mu;  // M = sum mu_kl A^k B^l
  double reconstruction_error = 0.0;
};

struct DecompositionC {
  DenseMatrix c;  // M = sum c_kl B^k A^l
  DenseMatrix r;  // row k holds M_{k, k+j mod N} at column j
  VerificationReport report;
};

/// A^k B^l with the standard clock and shift.
MonomialMatrix schwinger_word(std::int64_t n, std::int64_t k, std::int64_t l);

/// Tr[X^dag M] for a monomial X.
Complex trace_inner(const MonomialMatrix& x, const DenseMatrix& m);

/// mu_kl = (1/N) Tr[(A^k B^l)^dag M]. Throws DimensionMismatch for non-square M.
SchwingerCoeffs schwinger_coeffs(const DenseMatrix& m);

/// C = S^{-1} R with checks "reconstruction" and "cross-relation" (mu_kl = w^{-kl} c_lk).
DecompositionC ramakrishnan_decomposition(const DenseMatrix& m, double tol = 1e-10);

/// Tr[(A^k B^l)^dag (A^m B^n)] = N delta_km delta_ln, checked exactly.
VerificationReport gram_identity_check(std::int64_t n);

}  // namespace gcakit
