#include "gcakit/projective.hpp"

#include <sstream>
#include <string>

#include "gcakit/errors.hpp"

namespace gcakit {

namespace {

std::string format_element(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << ')';
  return os.str();
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error(ErrorCode::InvalidInput, "group needs at least one factor");
  for (const auto o : orders_) {
    if (o < 1) throw Error(ErrorCode::BadOrder, "cyclic factor orders must be >= 1");
    size_ *= static_cast<std::size_t>(o);
  }
}

std::size_t AbelianGroup::index(const GroupElement& g) const {
  if (g.size() != orders_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "element " + format_element(g) + " has the wrong rank");
  }
  std::size_t idx = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    idx = idx * static_cast<std::size_t>(orders_[j]) + static_cast<std::size_t>(floor_mod(g[j], orders_[j]));
  }
  return idx;
}

GroupElement AbelianGroup::element(std::size_t index) const {
  GroupElement g(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    const auto o = static_cast<std::size_t>(orders_[j]);
    g[j] = static_cast<std::int64_t>(index % o);
    index /= o;
  }
  return g;
}

std::size_t AbelianGroup::multiply(std::size_t g, std::size_t h) const {
  GroupElement a = element(g);
  const GroupElement b = element(h);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return index(a);
}

std::size_t AbelianGroup::generator(int j) const {
  GroupElement g(orders_.size(), 0);
  g[static_cast<std::size_t>(j)] = 1;
  return index(g);
}

FactorSet::FactorSet(std::vector<std::int64_t> orders,
                     const std::map<std::pair<GroupElement, GroupElement>, Phase>& table)
    : group_(std::move(orders)), values_(group_.size() * group_.size(), Phase::one()) {
  for (const auto& [key, value] : table) {
    values_[group_.index(key.first) * group_.size() + group_.index(key.second)] = value;
  }
}

FactorSet FactorSet::from_complex(std::vector<std::int64_t> orders,
                                  const std::map<std::pair<GroupElement, GroupElement>, Complex>& table) {
  std::map<std::pair<GroupElement, GroupElement>, Phase> exact;
  for (const auto& [key, value] : table) {
    const auto p = Phase::from_complex(value);
    if (!p) {
      throw Error(ErrorCode::IrrationalPhase, "phi" + format_element(key.first) + format_element(key.second) +
                                                  " is not a root of unity");
    }
    exact.emplace(key, *p);
  }
  return FactorSet(std::move(orders), exact);
}

void validate_factor_set(const FactorSet& fs) {
  const auto& g = fs.group();
  const std::size_t size = g.size();
  for (std::size_t a = 0; a < size; ++a) {
    if (!fs(g.identity(), a).is_one() || !fs(a, g.identity()).is_one()) {
      throw Error(ErrorCode::InvalidFactorSet,
                  "normalization fails at g = " + format_element(g.element(a)));
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      const std::size_t ab = g.multiply(a, b);
      for (std::size_t c = 0; c < size; ++c) {
        const Phase lhs = fs(a, b) * fs(ab, c);
        const Phase rhs = fs(a, g.multiply(b, c)) * fs(b, c);
        if (lhs != rhs) {
          throw Error(ErrorCode::InvalidFactorSet,
                      "cocycle identity fails at (" + format_element(g.element(a)) + ", " +
                          format_element(g.element(b)) + ", " + format_element(g.element(c)) + ")");
        }
      }
    }
  }
}

std::vector<std::vector<Phase>> commutator_phases(const FactorSet& fs) {
  const auto& g = fs.group();
  const int n = g.rank();
  std::vector<std::vector<Phase>> omega(static_cast<std::size_t>(n), std::vector<Phase>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const auto cj = g.generator(j);
      const auto ck = g.generator(k);
      omega[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = fs(cj, ck) / fs(ck, cj);
    }
  }
  return omega;
}

GcaSpec induced_spec(const FactorSet& fs) {
  const auto omega = commutator_phases(fs);
  const int n = fs.group().rank();
  std::int64_t nhat = 2;
  for (const auto& row : omega) {
    for (const auto& p : row) nhat = lcm64(nhat, p.den());
  }
  IntMatrix t = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Phase& p = omega[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      t(j, k) = p.num() * (nhat / p.den());
    }
  }
  return GcaSpec(validate_tmatrix(t, nhat), fs.group().orders());
}

Phase power_coefficient(const FactorSet& fs, int j) {
  const auto& g = fs.group();
  const std::int64_t nj = g.orders()[static_cast<std::size_t>(j)];
  const std::size_t cj = g.generator(j);
  Phase acc = Phase::one();
  for (std::int64_t p = 1; p <= nj; ++p) {
    GroupElement e(g.orders().size(), 0);
    e[static_cast<std::size_t>(j)] = nj - p;
    acc *= fs(cj, g.index(e)).inverse();
  }
  return acc;
}

Phase product_coefficient(const FactorSet& fs, const GroupElement& m) {
  // prod_j prod_{p=1}^{m_j} phi(c_j, c_j^{m_j - p} c_{j+1}^{m_{j+1}} ... c_n^{m_n})^{-1}
  const auto& g = fs.group();
  const GroupElement reduced = g.element(g.index(m));
  const std::size_t n = reduced.size();
  Phase acc = Phase::one();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t cj = g.generator(static_cast<int>(j));
    for (std::int64_t p = 1; p <= reduced[j]; ++p) {
      GroupElement tail(n, 0);
      tail[j] = reduced[j] - p;
      for (std::size_t l = j + 1; l < n; ++l) tail[l] = reduced[l];
      acc *= fs(cj, g.index(tail)).inverse();
    }
  }
  return acc;
}

ProjectiveRep projective_rep(const FactorSet& fs) {
  validate_factor_set(fs);
  const AbelianGroup& group = fs.group();
  const int n = group.rank();
  Representation gca = build_representation(induced_spec(fs));

  // D(c_j) = phi(c_j^{N_j})^{-1/N_j} e_j with the principal root.
  std::vector<MonomialMatrix> dc;
  for (int j = 0; j < n; ++j) {
    const Phase x = power_coefficient(fs, j);
    const Phase root(x.num(), x.den() * group.orders()[static_cast<std::size_t>(j)]);
    dc.push_back(root.inverse() * gca.gens[static_cast<std::size_t>(j)]);
  }

  VerificationReport report;
  const std::size_t size = group.size();
  std::vector<MonomialMatrix> d(size);
  std::vector<Phase> coeffs(size);
  d[group.identity()] = MonomialMatrix::identity(gca.dim);

  // Peel the leftmost generator: D(c_j x) = phi(c_j, x)^{-1} D(c_j) D(x). Indices
  // of x are smaller than those of c_j x, so ascending order suffices.
  std::size_t formula_mismatches = 0;
  std::string first_mismatch;
  for (std::size_t idx = 1; idx < size; ++idx) {
    GroupElement m = group.element(idx);
    std::size_t j = 0;
    while (m[j] == 0) ++j;
    GroupElement rest = m;
    rest[j] -= 1;
    const std::size_t rest_idx = group.index(rest);
    const std::size_t cj = group.generator(static_cast<int>(j));
    const Phase factor = fs(cj, rest_idx).inverse();
    coeffs[idx] = factor * coeffs[rest_idx];
    d[idx] = factor * (dc[j] * d[rest_idx]);

    if (product_coefficient(fs, m) != coeffs[idx]) {
      if (formula_mismatches++ == 0) first_mismatch = format_element(m);
    }
  }
  report.add("product-formula", formula_mismatches == 0,
             formula_mismatches == 0 ? "closed-form coefficients match the recursion for all " +
                                           std::to_string(size) + " elements"
                                     : std::to_string(formula_mismatches) + " mismatches, first at " +
                                           first_mismatch,
             static_cast<double>(formula_mismatches));

  for (int j = 0; j < n; ++j) {
    const std::size_t cj = group.generator(j);
    const bool ok = d[cj] == dc[static_cast<std::size_t>(j)];
    report.add("generator(" + std::to_string(j + 1) + ")", ok,
               ok ? "D(c_j) matches the rescaled e_j" : "assembled D(c_j) differs from the rescaled e_j",
               ok ? 0.0 : 1.0);
  }

  std::size_t failures = 0;
  std::string first_failure;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (d[a] * d[b] != fs(a, b) * d[group.multiply(a, b)]) {
        if (failures++ == 0) {
          first_failure = format_element(group.element(a)) + ", " + format_element(group.element(b));
        }
      }
    }
  }
  report.add("multiplier", failures == 0,
             failures == 0 ? "D(g)D(h) = phi(g,h)D(gh) exactly for all " + std::to_string(size * size) + " pairs"
                           : std::to_string(failures) + " failing pairs, first (" + first_failure + ")",
             static_cast<double>(failures));

  return ProjectiveRep{group, std::move(d), std::move(coeffs), commutator_phases(fs), std::move(gca),
                       std::move(report)};
}

}  // namespace gcakit
