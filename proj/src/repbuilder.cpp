#include "gcakit/repbuilder.hpp"

#include <string>

#include "gcakit/errors.hpp"
#include "gcakit/weylpairs.hpp"

namespace gcakit {

namespace {

IntMatrix ordered_t(int n) {
  IntMatrix t = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      t(j, k) = 1;
      t(k, j) = -1;
    }
  }
  return t;
}

// Identity factors I^{(count)} of the given size.
void append_identities(std::vector<MonomialMatrix>& factors, int count, std::int64_t size) {
  for (int i = 0; i < count; ++i) {
    factors.push_back(MonomialMatrix::identity(static_cast<std::size_t>(size)));
  }
}

}  // namespace

GcaSpec::GcaSpec(TMatrix t, std::vector<std::int64_t> orders)
    : t_(std::move(t)), orders_(std::move(orders)) {
  if (static_cast<int>(orders_.size()) != t_.n()) {
    throw Error(ErrorCode::DimensionMismatch, "need one order per generator");
  }
  for (const auto o : orders_) {
    if (o < 1) throw Error(ErrorCode::BadOrder, "generator orders must be >= 1");
  }
  for (int j = 0; j < t_.n(); ++j) {
    for (int k = j + 1; k < t_.n(); ++k) {
      const std::int64_t ord = commutator(j, k).order();
      const auto nj = orders_[static_cast<std::size_t>(j)];
      const auto nk = orders_[static_cast<std::size_t>(k)];
      if (nj % ord != 0 || nk % ord != 0) {
        throw Error(ErrorCode::InconsistentOrders,
                    "commutation phase of (" + std::to_string(j) + "," + std::to_string(k) +
                        ") has order " + std::to_string(ord) + " not dividing gcd(" +
                        std::to_string(nj) + ", " + std::to_string(nk) + ")");
      }
    }
  }
}

GcaSpec GcaSpec::ordered(int n, std::int64_t nhat) {
  return GcaSpec(validate_tmatrix(ordered_t(n), nhat),
                 std::vector<std::int64_t>(static_cast<std::size_t>(n), nhat));
}

Representation build_representation(const GcaSpec& spec) {
  const SkewNormalForm snf = skew_normal_form(spec.t());
  const int n = spec.n();
  const int s = snf.s;

  std::vector<WeylPair> pairs;
  std::size_t dim = 1;
  for (int i = 0; i < s; ++i) {
    pairs.push_back(weyl_pair_for(snf.t_inv[static_cast<std::size_t>(i)], snf.nhat));
    dim *= static_cast<std::size_t>(pairs.back().order);
  }

  Representation rep{dim, {}, spec, {}, Family::General};
  for (int j = 0; j < n; ++j) {
    // Block i sits in tensor slot s-1-i; commuting eps_k (k >= 2s) are scalars.
    std::vector<MonomialMatrix> slots(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
      const auto& pair = pairs[static_cast<std::size_t>(i)];
      const std::int64_t a_exp = floor_mod(snf.u(j, 2 * i), pair.order);
      const std::int64_t b_exp = floor_mod(snf.u(j, 2 * i + 1), pair.order);
      slots[static_cast<std::size_t>(s - 1 - i)] = pair.a.pow(a_exp) * pair.b.pow(b_exp);
    }
    const MonomialMatrix word = tensor(slots);
    const std::int64_t nj = spec.orders()[static_cast<std::size_t>(j)];
    const auto power = word.pow(nj).scalar_value();
    if (!power) {
      throw Error(ErrorCode::InconsistentOrders,
                  "generator " + std::to_string(j) + " has no normalization with e^" +
                      std::to_string(nj) + " = I");
    }
    // mu^{N_j} = power^{-1}; principal root has exponent in [0, 1/N_j).
    const Phase target = power->inverse();
    const Phase mu(target.num(), target.den() * nj);
    rep.mu.push_back(mu);
    rep.gens.push_back(mu * word);
  }

  const auto report = verify_gca(rep);
  if (!report.overall()) {
    const auto& failed = report.checks()[*report.first_failure()];
    throw Error(ErrorCode::InconsistentOrders, failed.name + ": " + failed.detail);
  }
  return rep;
}

VerificationReport verify_gca(const Representation& rep) {
  VerificationReport report;
  const int n = rep.spec.n();
  if (static_cast<int>(rep.gens.size()) != n) {
    report.add("generator-count", false,
               std::to_string(rep.gens.size()) + " generators for n = " + std::to_string(n));
    return report;
  }
  for (const auto& g : rep.gens) {
    if (g.dim() != rep.dim) {
      report.add("dimension", false, "generator of size " + std::to_string(g.dim()) +
                                         " in a representation of size " + std::to_string(rep.dim));
      return report;
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const auto& ej = rep.gens[static_cast<std::size_t>(j)];
      const auto& ek = rep.gens[static_cast<std::size_t>(k)];
      const Phase expected = rep.spec.commutator(j, k);
      const auto measured = (ej * ek).ratio_to(ek * ej);
      const std::string name = "commute(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
      if (!measured) {
        report.add(name, false, "e_j e_k is not a scalar multiple of e_k e_j", 2.0);
        continue;
      }
      const bool ok = *measured == expected;
      report.add(name, ok, "measured " + measured->to_string() + ", expected " + expected.to_string(),
                 ok ? 0.0 : std::abs(measured->value() - expected.value()));
    }
  }
  for (int j = 0; j < n; ++j) {
    const std::int64_t nj = rep.spec.orders()[static_cast<std::size_t>(j)];
    const auto power = rep.gens[static_cast<std::size_t>(j)].pow(nj);
    const bool ok = power.is_identity();
    const auto scalar = power.scalar_value();
    std::string detail = "e^" + std::to_string(nj) + " = ";
    detail += ok ? "I" : (scalar ? scalar->to_string() + " I" : "non-scalar");
    report.add("order(" + std::to_string(j + 1) + ")", ok, detail,
               ok ? 0.0 : (scalar ? std::abs(scalar->value() - 1.0) : 2.0));
  }
  return report;
}

Representation clifford_generators(int n) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "need at least one generator");
  const int m = n / 2;
  Representation rep{std::size_t{1} << m, {}, GcaSpec::ordered(n, 2), {}, Family::Clifford};
  for (int j = 0; j < n; ++j) {
    std::vector<MonomialMatrix> factors;
    const int prefix = j / 2;
    if (prefix < m) {
      append_identities(factors, 0, 2);
      for (int r = 0; r < prefix; ++r) factors.push_back(sigma2());
      factors.push_back(j % 2 == 0 ? sigma1() : sigma3());
      append_identities(factors, m - prefix - 1, 2);
    } else {
      for (int r = 0; r < m; ++r) factors.push_back(sigma2());
    }
    rep.gens.push_back(tensor(factors));
    rep.mu.push_back(Phase::one());
  }
  return rep;
}

Phase ordered_mu(std::int64_t order) {
  if (order % 2 == 1) return Phase((order + 1) / 2, order);
  // (A^{-1}B)^N = -I for even N, so mu^N must be -1; this branch makes N = 2
  // coincide with the Clifford family.
  return Phase(1, 2 * order);
}

Representation ordered_gca_generators(int n, std::int64_t order) {
  if (n < 1) throw Error(ErrorCode::BadOrder, "need at least one generator");
  if (order < 2) throw Error(ErrorCode::BadOrder, "ordered family needs N >= 2");
  const int m = n / 2;
  std::size_t dim = 1;
  for (int r = 0; r < m; ++r) dim *= static_cast<std::size_t>(order);

  const MonomialMatrix a = shift(order);
  const MonomialMatrix b = clock(order);
  const MonomialMatrix x = a.adjoint() * b;
  const Phase mu = ordered_mu(order);

  Representation rep{dim, {}, GcaSpec::ordered(n, order), {}, Family::Ordered};
  for (int j = 0; j < n; ++j) {
    std::vector<MonomialMatrix> factors;
    const int prefix = std::min(j / 2, m);
    for (int r = 0; r < prefix; ++r) factors.push_back(x);
    if (prefix < m) {
      factors.push_back(j % 2 == 0 ? a : b);
      append_identities(factors, m - prefix - 1, order);
    }
    const Phase scale = mu.pow(prefix);
    rep.gens.push_back(scale * tensor(factors));
    rep.mu.push_back(scale);
  }
  return rep;
}

}  // namespace gcakit
