#pragma once

#include <cstdint>

#include "gcakit/dense.hpp"
#include "gcakit/monomial.hpp"

namespace gcakit {

/// Real table w_kl with k, l = -nu..nu stored at (k + nu, l + nu).
struct WignerTable {
  std::int64_t nu = 0;
  RealMatrix w;

  /// Throws NotReal if any imaginary part exceeds 1e-12, DimensionMismatch
  /// unless the table is square of odd size.
  static WignerTable from_complex(const DenseMatrix& w);
};

/// w^{xi eta / 2} B^xi A^eta with the symmetric clock; the half power uses the
/// inverse of 2 modulo N so every phase stays an N-th root.
MonomialMatrix wigner_word(std::int64_t nu, std::int64_t xi, std::int64_t eta);

/// H = sum v_{xi eta} w^{xi eta/2} B^xi A^eta, v the finite Fourier transform of w.
DenseMatrix wigner_forward(const WignerTable& table);

struct WignerInverse {
  WignerTable table;
  double imag_residue = 0.0;  // largest discarded imaginary part
};

/// w_kl = (1/N^2) sum_{xi,eta} Tr[w^{xi k + eta l - xi eta/2} A^{-eta} B^{-xi} H].
/// Throws DimensionMismatch, EvenDimension or NotHermitian.
WignerInverse wigner_inverse(const DenseMatrix& h);

}  // namespace gcakit
