#pragma once

#include <cstdint>

#include "gcakit/dense.hpp"
#include "gcakit/monomial.hpp"
#include "gcakit/report.hpp"

namespace gcakit {

/// (k, l, m, n) with kn - lm = 1 (mod N), N even, entries in [0, N).
class CanonicalParams {
 public:
  /// Throws InvalidInput (odd N or entries out of range) or BadDeterminant.
  CanonicalParams(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t order);

  std::int64_t k() const { return k_; }
  std::int64_t l() const { return l_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  std::int64_t order() const { return order_; }
  bool is_identity() const { return k_ == 1 && l_ == 0 && m_ == 0 && n_ == 1; }

 private:
  std::int64_t k_, l_, m_, n_, order_;
};

struct CanonicalPair {
  MonomialMatrix a;  // w^{-kl/2} A^k B^l
  MonomialMatrix b;  // w^{-mn/2} A^m B^n
  VerificationReport report;
};

/// Half powers of w are exact 2N-th roots. Relations are checked exactly.
CanonicalPair canonical_pair(const CanonicalParams& p);

struct Intertwiner {
  DenseMatrix s;
  Complex zeta_a{1.0, 0.0};
  Complex zeta_b{1.0, 0.0};
  VerificationReport report;
};

/// S_xy = exp(-pi i (n x^2 - 2xy + k y^2) / (m N)); S = I for the identity.
/// Checks S A = zeta A' S, S B = zeta' B' S and S^dag S proportional to I within
/// tol. Throws UnsupportedTransform for m = 0 (other than the identity) or when
/// a check fails.
Intertwiner canonical_intertwiner(const CanonicalParams& p, double tol = 1e-9);

}  // namespace gcakit
