#include "gcakit/magnetic.hpp"

#include <cmath>

#include "gcakit/errors.hpp"

namespace gcakit {

namespace {

Flux reduce(Flux f) {
  if (f.q == 0) throw Error(ErrorCode::InvalidInput, "flux denominator must be nonzero");
  if (f.q < 0) {
    f.p = -f.p;
    f.q = -f.q;
  }
  const std::int64_t g = gcd64(f.p, f.q);
  return {f.p / g, f.q / g};
}

Flux rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::IrrationalFlux, "flux is not finite");
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(p / static_cast<double>(q) - x) <= 1e-12) return reduce({static_cast<std::int64_t>(p), q});
  }
  throw Error(ErrorCode::IrrationalFlux, "flux " + std::to_string(x) + " has no small rational form");
}

std::size_t pair_slot(int j, int k) {
  // (0,1) -> f12, (0,2) -> f13, (1,2) -> f23
  return static_cast<std::size_t>(j + k - 1);
}

}  // namespace

MagneticLattice::MagneticLattice(Flux f12, Flux f13, Flux f23) : f_{reduce(f12), reduce(f13), reduce(f23)} {}

MagneticLattice MagneticLattice::from_real(double f12, double f13, double f23, std::int64_t max_den) {
  return MagneticLattice(rationalize(f12, max_den), rationalize(f13, max_den), rationalize(f23, max_den));
}

Flux MagneticLattice::flux(int j, int k) const {
  if (j < 0 || k < 0 || j > 2 || k > 2) throw Error(ErrorCode::InvalidInput, "lattice index out of range");
  if (j == k) return {0, 1};
  if (j < k) return f_[pair_slot(j, k)];
  const Flux f = f_[pair_slot(k, j)];
  return {-f.p, f.q};
}

GcaSpec magnetic_spec(const MagneticLattice& lat) {
  std::int64_t nhat = 2;
  for (const auto& f : lat.fluxes()) nhat = lcm64(nhat, f.q);
  IntMatrix t = IntMatrix::Zero(3, 3);
  std::vector<std::int64_t> orders(3, 1);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (j == k) continue;
      const Flux f = lat.flux(j, k);
      t(j, k) = -f.p * (nhat / f.q);
      orders[static_cast<std::size_t>(j)] = lcm64(orders[static_cast<std::size_t>(j)], f.q);
    }
  }
  return GcaSpec(validate_tmatrix(t, nhat), orders);
}

Representation magnetic_translation_rep(const MagneticLattice& lat) {
  return build_representation(magnetic_spec(lat));
}

Phase bloch_phase(std::int64_t n1, std::int64_t n2, std::int64_t n3, const MagneticLattice& lat) {
  const std::int64_t n[3] = {n1, n2, n3};
  std::int64_t common = 1;
  for (const auto& f : lat.fluxes()) common = lcm64(common, f.q);
  std::int64_t num = 0;
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) {
      const Flux f = lat.flux(j, k);
      num += n[j] * n[k] * f.p * (common / f.q);
    }
  }
  // exp(i pi num / common) = exp(2 pi i num / (2 common))
  return Phase(num, 2 * common);
}

}  // namespace gcakit
