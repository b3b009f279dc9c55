#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcakit/dense.hpp"
#include "gcakit/phase.hpp"

namespace gcakit {

/// Generalized permutation matrix with exact root-of-unity entries.
///
/// Column c holds a single nonzero entry phase[c] in row target[c]. Every
/// generator produced by this library is of this form, and the group of such
/// matrices is closed under products, adjoints, tensor products and powers.
class MonomialMatrix {
 public:
  /// 1x1 identity.
  MonomialMatrix() : target_{0}, phase_{Phase::one()} {}
  MonomialMatrix(std::vector<std::size_t> target, std::vector<Phase> phase);

  static MonomialMatrix identity(std::size_t dim);
  static MonomialMatrix scalar(std::size_t dim, Phase p);
  static MonomialMatrix diagonal(std::vector<Phase> phases);
  /// Permutation matrix sending basis vector c to target[c].
  static MonomialMatrix permutation(std::vector<std::size_t> target);

  std::size_t dim() const noexcept { return target_.size(); }
  std::span<const std::size_t> target() const noexcept { return target_; }
  std::span<const Phase> phases() const noexcept { return phase_; }

  Complex entry(std::size_t row, std::size_t col) const;

  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  MonomialMatrix operator*(Phase p) const;
  friend MonomialMatrix operator*(Phase p, const MonomialMatrix& m) { return m * p; }

  MonomialMatrix adjoint() const;
  MonomialMatrix pow(std::int64_t k) const;

  bool is_identity() const;
  /// p with *this == p * I, if any.
  std::optional<Phase> scalar_value() const;
  /// p with *this == p * other, if any.
  std::optional<Phase> ratio_to(const MonomialMatrix& other) const;

  PhaseSum trace() const;
  DenseMatrix to_dense() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<std::size_t> target_;
  std::vector<Phase> phase_;
};

MonomialMatrix tensor(const MonomialMatrix& a, const MonomialMatrix& b);
/// Left-to-right Kronecker product of all factors; empty input gives 1x1 identity.
MonomialMatrix tensor(std::span<const MonomialMatrix> factors);
MonomialMatrix mat_mul(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix adjoint(const MonomialMatrix& a);

/// Tr[x^dagger y] as an exact sum of roots of unity.
PhaseSum trace_inner(const MonomialMatrix& x, const MonomialMatrix& y);

}  // namespace gcakit
