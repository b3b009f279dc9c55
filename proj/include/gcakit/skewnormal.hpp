#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "gcakit/report.hpp"

namespace gcakit {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Antisymmetric integer matrix T together with its modulus N-hat. The pair
/// encodes every commutation phase exp(2 pi i t_jk / nhat) of an algebra.
///
/// Only validate_tmatrix() constructs one, so entries are always reduced to
/// the residue range (-floor(nhat/2), ceil(nhat/2)] above the diagonal.
class TMatrix {
 public:
  int n() const { return static_cast<int>(t_.rows()); }
  std::int64_t nhat() const { return nhat_; }
  const IntMatrix& entries() const { return t_; }
  std::int64_t operator()(int j, int k) const { return t_(j, k); }

 private:
  friend TMatrix validate_tmatrix(const IntMatrix& raw, std::int64_t nhat);
  IntMatrix t_;
  std::int64_t nhat_ = 2;
};

/// T = U * normal_form() * U^T (mod nhat), where normal_form() is
/// [[0,t_1],[-t_1,0]] + ... + [[0,t_s],[-t_s,0]] + O_{n-2s}.
struct SkewNormalForm {
  int n = 0;
  int s = 0;
  std::int64_t nhat = 2;
  std::vector<std::int64_t> t_inv;  // each in [1, nhat-1]
  IntMatrix u;

  IntMatrix normal_form() const;
  /// nhat / gcd(t_j, nhat) for each block.
  std::vector<std::int64_t> block_orders() const;
};

/// Entries of T are read modulo nhat.
TMatrix validate_tmatrix(const IntMatrix& raw, std::int64_t nhat);

/// Alternating-form reduction over the integers by unimodular congruences.
/// Blocks whose invariant vanishes modulo nhat are moved into the null part.
SkewNormalForm skew_normal_form(const TMatrix& t);

/// Checks: "unimodular" (|det U| = 1 by fraction-free elimination),
/// "congruence" (T - U T' U^T = 0 mod nhat), "block-shape".
VerificationReport verify_congruence(const TMatrix& t, const SkewNormalForm& f);

/// Exact determinant by Bareiss fraction-free elimination.
std::int64_t integer_determinant(const IntMatrix& m);

/// x mod nhat mapped into (-floor(nhat/2), ceil(nhat/2)].
std::int64_t symmetric_residue(std::int64_t x, std::int64_t nhat);

}  // namespace gcakit
