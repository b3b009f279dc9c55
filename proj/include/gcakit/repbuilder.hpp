#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcakit/monomial.hpp"
#include "gcakit/report.hpp"
#include "gcakit/skewnormal.hpp"

namespace gcakit {

/// Integer presentation of a generalized Clifford algebra:
/// e_j e_k = exp(2 pi i t_jk / nhat) e_k e_j and e_j^{N_j} = 1.
class GcaSpec {
 public:
  /// Throws InconsistentOrders unless the order of every commutation phase
  /// divides gcd(N_j, N_k).
  GcaSpec(TMatrix t, std::vector<std::int64_t> orders);

  /// T with +1 above the diagonal and the given modulus, all orders = nhat.
  static GcaSpec ordered(int n, std::int64_t nhat);

  const TMatrix& t() const { return t_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  int n() const { return t_.n(); }
  /// exp(2 pi i t_jk / nhat)
  Phase commutator(int j, int k) const { return Phase(t_(j, k), t_.nhat()); }

 private:
  TMatrix t_;
  std::vector<std::int64_t> orders_;
};

enum class Family { General, Clifford, Ordered };

struct Representation {
  std::size_t dim = 1;
  std::vector<MonomialMatrix> gens;
  GcaSpec spec;
  std::vector<Phase> mu;  // normalization factors in front of each generator word
  Family family = Family::General;
};

/// Skew-normal form, tensor words of Weyl pairs, then the product
/// transformation e_j = mu_j eps_1^{u_j1} ... eps_n^{u_jn}. mu_j is the
/// solution of e_j^{N_j} = I with the smallest nonnegative phase exponent.
Representation build_representation(const GcaSpec& spec);

/// Exact pairwise commutation ("commute(j,k)") and order ("order(j)") checks.
VerificationReport verify_gca(const Representation& rep);

/// Hermitian unitary Clifford generators in dimension 2^floor(n/2):
/// e_{2j-1} = s2^{(j-1)} s1 I..., e_{2j} = s2^{(j-1)} s3 I..., e_{2m+1} = s2^{m}.
Representation clifford_generators(int n);

/// Generators of e_j e_k = w e_k e_j (j < k), e_j^N = 1, in dimension
/// N^floor(n/2), built from mu^r (A^{-1} B)^{(r)} prefixes of A and B.
Representation ordered_gca_generators(int n, std::int64_t order);

/// mu for the ordered family: w^{(N+1)/2} for odd N, exp(i pi / N) for even N.
Phase ordered_mu(std::int64_t order);

struct NamedMatrix {
  std::string name;
  MonomialMatrix matrix;
};

/// pauli, quaternion, dirac or dirac_positive_energy.
std::vector<NamedMatrix> catalog(std::string_view name);
std::vector<std::string> catalog_names();

/// Pauli matrices as exact monomials.
MonomialMatrix sigma1();
MonomialMatrix sigma2();
MonomialMatrix sigma3();

}  // namespace gcakit
