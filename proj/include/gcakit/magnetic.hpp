#pragma once

#include <array>
#include <cstdint>

#include "gcakit/phase.hpp"
#include "gcakit/repbuilder.hpp"

namespace gcakit {

/// Reduced fraction p/q with q > 0.
struct Flux {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

/// Fluxes f_12, f_13, f_23 through the lattice cells; tau_j tau_k =
/// exp(-2 pi i f_jk) tau_k tau_j.
class MagneticLattice {
 public:
  /// Throws InvalidInput for a zero denominator; reduces each fraction.
  MagneticLattice(Flux f12, Flux f13, Flux f23);

  /// Rational approximation of real fluxes; throws IrrationalFlux when no
  /// denominator up to max_den matches within 1e-12.
  static MagneticLattice from_real(double f12, double f13, double f23, std::int64_t max_den = 1 << 16);

  /// f_jk for 0-based j, k; antisymmetric, zero on the diagonal.
  Flux flux(int j, int k) const;
  const std::array<Flux, 3>& fluxes() const { return f_; }

 private:
  std::array<Flux, 3> f_;
};

/// nhat = lcm of flux denominators, t_jk = -p_jk nhat / q_jk, N_j the least
/// common multiple of the denominators touching j.
GcaSpec magnetic_spec(const MagneticLattice& lat);

/// Generators tau_1, tau_2, tau_3 via the general builder.
Representation magnetic_translation_rep(const MagneticLattice& lat);

/// exp(i phi) with phi(n1 a1 + n2 a2 + n3 a3) = pi (n1 n2 f12 + n1 n3 f13 + n2 n3 f23).
Phase bloch_phase(std::int64_t n1, std::int64_t n2, std::int64_t n3, const MagneticLattice& lat);

}  // namespace gcakit
