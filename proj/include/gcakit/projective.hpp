#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gcakit/dense.hpp"
#include "gcakit/monomial.hpp"
#include "gcakit/report.hpp"
#include "gcakit/repbuilder.hpp"

namespace gcakit {

/// Group element of Z_{N_1} x ... x Z_{N_n} as an exponent tuple (m_1, ..., m_n).
using GroupElement = std::vector<std::int64_t>;

/// Enumerates Z_{N_1} x ... x Z_{N_n} in mixed radix order (last index fastest).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  std::size_t size() const { return size_; }

  std::size_t index(const GroupElement& g) const;
  GroupElement element(std::size_t index) const;
  std::size_t multiply(std::size_t g, std::size_t h) const;
  std::size_t generator(int j) const;
  std::size_t identity() const { return 0; }

 private:
  std::vector<std::int64_t> orders_;
  std::size_t size_ = 1;
};

/// Multiplier system phi(g, h). Entries absent from the table are 1.
class FactorSet {
 public:
  FactorSet(std::vector<std::int64_t> orders, const std::map<std::pair<GroupElement, GroupElement>, Phase>& table);

  /// Accepts complex entries; throws IrrationalPhase for values that are not
  /// roots of unity of moderate order.
  static FactorSet from_complex(std::vector<std::int64_t> orders,
                                const std::map<std::pair<GroupElement, GroupElement>, Complex>& table);

  const AbelianGroup& group() const { return group_; }
  Phase operator()(std::size_t g, std::size_t h) const { return values_[g * group_.size() + h]; }

 private:
  AbelianGroup group_;
  std::vector<Phase> values_;
};

/// Throws InvalidFactorSet naming the first triple that breaks the cocycle
/// identity, or the first element that breaks normalization.
void validate_factor_set(const FactorSet& fs);

struct ProjectiveRep {
  AbelianGroup group;
  std::vector<MonomialMatrix> d;     // D(g) by group index
  std::vector<Phase> phi_coeffs;     // D(prod c^m) = phi * prod D(c_j)^{m_j}
  std::vector<std::vector<Phase>> commutators;  // Omega(c_j, c_k)
  Representation gca;                // the underlying e_j
  VerificationReport report;

  DenseMatrix dense(const GroupElement& g) const { return d[group.index(g)].to_dense(); }
};

/// Omega(c_j, c_k) = phi(c_j, c_k) / phi(c_k, c_j).
std::vector<std::vector<Phase>> commutator_phases(const FactorSet& fs);

/// GCA presentation induced by a factor set.
GcaSpec induced_spec(const FactorSet& fs);

/// phi(c_j^{N_j}) = prod_{p=1}^{N_j} phi(c_j, c_j^{N_j - p})^{-1}.
Phase power_coefficient(const FactorSet& fs, int j);

/// Product-formula coefficient phi(prod c^m) for one element.
Phase product_coefficient(const FactorSet& fs, const GroupElement& m);

/// Validates fs, builds the GCA representation, rescales to D(c_j) with the
/// principal root and assembles every D(g). The report covers the product
/// formula against the generator-peeling recursion and D(g)D(h) = phi(g,h)D(gh).
ProjectiveRep projective_rep(const FactorSet& fs);

}  // namespace gcakit
