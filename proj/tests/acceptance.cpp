// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "gcakit/canonical.hpp"
#include "gcakit/cli.hpp"
#include "gcakit/errors.hpp"
#include "gcakit/io.hpp"
#include "gcakit/lmatrix.hpp"
#include "gcakit/magnetic.hpp"
#include "gcakit/projective.hpp"
#include "gcakit/repbuilder.hpp"
#include "gcakit/schwinger.hpp"
#include "gcakit/skewnormal.hpp"
#include "gcakit/wigner.hpp"
#include "oracles.hpp"

using namespace gcakit;
using oracle::Mat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Records the first failure message and keeps counting.
struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }
  Verdict verdict(const std::string& summary) const {
    if (failures == 0) return {true, summary + ", " + std::to_string(checks) + " checks"};
    return {false, std::to_string(failures) + "/" + std::to_string(checks) + " failed, first: " + first};
  }
};

std::string cli_out(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

// e_{2j-1} = s2^(j-1) s1 I.., e_{2j} = s2^(j-1) s3 I.., e_{2m+1} = s2^m.
std::vector<Mat> printed_clifford(int n) {
  const int m = n / 2;
  std::vector<Mat> out;
  for (int j = 0; j < n; ++j) {
    Mat word = oracle::id(1);
    const int prefix = std::min(j / 2, m);
    for (int r = 0; r < prefix; ++r) word = oracle::kron(word, oracle::s2());
    if (prefix < m) {
      word = oracle::kron(word, j % 2 == 0 ? oracle::s1() : oracle::s3());
      for (int r = prefix + 1; r < m; ++r) word = oracle::kron(word, oracle::id(2));
    }
    out.push_back(word);
  }
  return out;
}

std::vector<MonomialMatrix> generators_from_cli(const std::string& text) {
  std::vector<MonomialMatrix> out;
  const io::Json doc = io::parse(text);
  for (const auto& g : doc["generators"]) out.push_back(io::monomial_from_json(g));
  return out;
}

// Dense check of the commutation phases and orders.
bool dense_relations(const Representation& rep, double tol) {
  const int n = rep.spec.n();
  const int dim = static_cast<int>(rep.dim);
  for (int j = 0; j < n; ++j) {
    const Mat ej = rep.gens[static_cast<std::size_t>(j)].to_dense();
    if (oracle::maxdiff(oracle::mpow(ej, rep.spec.orders()[static_cast<std::size_t>(j)]), oracle::id(dim)) > tol) return false;
    for (int k = j + 1; k < n; ++k) {
      const Mat ek = rep.gens[static_cast<std::size_t>(k)].to_dense();
      if (oracle::maxdiff(ej * ek, oracle::root(rep.spec.t()(j, k), rep.spec.t().nhat()) * ek * ej) > tol) return false;
    }
  }
  return true;
}

IntMatrix random_antisymmetric(int n, std::int64_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  IntMatrix t = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      t(j, k) = dist(rng);
      t(k, j) = -t(j, k);
    }
  }
  return t;
}

// Fraction-free integer determinant.
std::int64_t bareiss(IntMatrix a) {
  const Eigen::Index n = a.rows();
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool congruent_by_hand(const IntMatrix& t, const SkewNormalForm& f) {
  const IntMatrix lhs = f.u * f.normal_form() * f.u.transpose();
  for (Eigen::Index j = 0; j < t.rows(); ++j) {
    for (Eigen::Index k = 0; k < t.cols(); ++k) {
      if ((lhs(j, k) - t(j, k)) % f.nhat != 0) return false;
    }
  }
  return f.n == 0 || std::abs(bareiss(f.u)) == 1;
}

Verdict criterion1() {
  Tally tally;
  for (int n = 2; n <= 7; ++n) {
    int code = 0;
    const auto from_cli = generators_from_cli(cli_out({"clifford", std::to_string(n)}, code));
    tally.expect(code == 0, "clifford " + std::to_string(n) + " exit code");
    const auto rep = clifford_generators(n);
    const auto printed = printed_clifford(n);
    tally.expect(from_cli.size() == static_cast<std::size_t>(n), "generator count");
    for (int j = 0; j < n && j < static_cast<int>(from_cli.size()); ++j) {
      const auto& g = from_cli[static_cast<std::size_t>(j)];
      tally.expect(g == rep.gens[static_cast<std::size_t>(j)], "CLI monomial differs from library");
      tally.expect(g.dim() == printed[static_cast<std::size_t>(j)].rows() &&
                       oracle::maxdiff(g.to_dense(), printed[static_cast<std::size_t>(j)]) == 0.0,
                   "n=" + std::to_string(n) + " e" + std::to_string(j + 1) + " differs from the printed word");
    }
    tally.expect(verify_gca(rep).overall(), "verify_gca n=" + std::to_string(n));
  }
  return tally.verdict("n = 2..7 bit-exact");
}

Verdict criterion2() {
  Tally tally;
  for (int n = 1; n <= 5; ++n) {
    for (std::int64_t big_n = 2; big_n <= 6; ++big_n) {
      int code = 0;
      const std::string text = cli_out({"ordered", std::to_string(n), std::to_string(big_n)}, code);
      const std::string tag = "(" + std::to_string(n) + "," + std::to_string(big_n) + ")";
      tally.expect(code == 0, "ordered " + tag + " exit code");
      const auto rep = ordered_gca_generators(n, big_n);
      tally.expect(verify_gca(rep).overall(), "verify_gca " + tag);
      tally.expect(dense_relations(rep, 1e-9), "dense relations " + tag);
      tally.expect(generators_from_cli(text) == rep.gens, "CLI output differs " + tag);
    }
    int code = 0;
    tally.expect(generators_from_cli(cli_out({"ordered", std::to_string(n), "2"}, code)) ==
                     generators_from_cli(cli_out({"clifford", std::to_string(n)}, code)),
                 "ordered N=2 != clifford n=" + std::to_string(n));
  }
  return tally.verdict("n <= 5, N <= 6, N = 2 equals clifford");
}

Verdict criterion3() {
  Tally tally;
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const std::int64_t nhat = 2 + static_cast<std::int64_t>(rng() % 11);
    const TMatrix t = validate_tmatrix(random_antisymmetric(n, 3 * nhat, rng), nhat);
    const auto f = skew_normal_form(t);
    tally.expect(verify_congruence(t, f).overall(), "verify_congruence trial " + std::to_string(trial));
    tally.expect(congruent_by_hand(t.entries(), f), "independent congruence trial " + std::to_string(trial));
  }
  // Printed Clifford U witnesses.
  for (int n = 2; n <= 9; ++n) {
    const int m = n / 2;
    IntMatrix u = IntMatrix::Zero(n, n);
    for (int j = 1; j <= m; ++j) {
      const int b = m - j + 1;
      u(2 * j - 2, 2 * b - 2) = 1;
      u(2 * j - 1, 2 * b - 1) = 1;
      for (int later = b + 1; later <= m; ++later) {
        for (int r : {2 * j - 2, 2 * j - 1}) {
          u(r, 2 * later - 2) = -1;
          u(r, 2 * later - 1) = 1;
        }
      }
    }
    if (n % 2 == 1) {
      for (int b = 1; b <= m; ++b) {
        u(n - 1, 2 * b - 2) = -1;
        u(n - 1, 2 * b - 1) = 1;
      }
      u(n - 1, n - 1) = 1;
    }
    IntMatrix clifford_t = IntMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        clifford_t(j, k) = 1;
        clifford_t(k, j) = -1;
      }
    }
    SkewNormalForm f;
    f.n = n;
    f.s = m;
    f.nhat = 2;
    f.t_inv.assign(static_cast<std::size_t>(m), 1);
    f.u = u;
    const TMatrix t = validate_tmatrix(clifford_t, 2);
    tally.expect(verify_congruence(t, f).overall(), "printed U rejected for n=" + std::to_string(n));
    tally.expect(congruent_by_hand(clifford_t, f), "printed U fails the independent check n=" + std::to_string(n));
  }
  return tally.verdict("500 random T plus printed U fixtures n = 2..9");
}

Verdict criterion4() {
  Tally tally;
  std::mt19937_64 rng(4004);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const std::int64_t nhat = 2 + static_cast<std::int64_t>(rng() % 7);
    const TMatrix t = validate_tmatrix(random_antisymmetric(n, nhat, rng), nhat);
    std::vector<std::int64_t> orders(static_cast<std::size_t>(n), 1);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (j != k) orders[static_cast<std::size_t>(j)] = lcm64(orders[static_cast<std::size_t>(j)], Phase(t(j, k), nhat).den());
      }
      orders[static_cast<std::size_t>(j)] *= 1 + static_cast<std::int64_t>(rng() % 2);
    }
    const auto rep = build_representation(GcaSpec(t, orders));
    tally.expect(verify_gca(rep).overall(), "verify_gca trial " + std::to_string(trial));
    tally.expect(dense_relations(rep, 1e-9), "dense relations trial " + std::to_string(trial));
  }
  return tally.verdict("100 random specs");
}

FactorSet bilinear(const std::vector<std::int64_t>& orders, Phase omega, const std::vector<Phase>& beta) {
  const AbelianGroup g(orders);
  std::map<std::pair<GroupElement, GroupElement>, Phase> table;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      const auto ga = g.element(a);
      const auto gb = g.element(b);
      table[{ga, gb}] = omega.pow(ga[0] * gb[1]) * beta[a] * beta[b] / beta[g.multiply(a, b)];
    }
  }
  return FactorSet(orders, table);
}

double multiplier_deviation(const ProjectiveRep& rep, const FactorSet& fs) {
  double worst = 0.0;
  const auto& g = rep.group;
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      const Mat lhs = rep.d[a].to_dense() * rep.d[b].to_dense();
      const Mat rhs = fs(a, b).value() * rep.d[g.multiply(a, b)].to_dense();
      worst = std::max(worst, oracle::maxdiff(lhs, rhs));
    }
  }
  return worst;
}

Verdict criterion5() {
  Tally tally;
  std::mt19937_64 rng(5005);
  for (const auto& [order, omega] : std::vector<std::pair<std::int64_t, Phase>>{{2, Phase(1, 2)}, {3, Phase(1, 3)}}) {
    for (int variant = 0; variant < 2; ++variant) {
      const std::size_t size = static_cast<std::size_t>(order * order);
      std::vector<Phase> beta(size, Phase::one());
      if (variant == 1) {
        for (std::size_t i = 1; i < size; ++i) beta[i] = Phase(static_cast<std::int64_t>(rng() % 12), 12);
      }
      const FactorSet fs = bilinear({order, order}, omega, beta);
      const auto rep = projective_rep(fs);
      const std::string tag = "Z" + std::to_string(order) + "xZ" + std::to_string(order);
      tally.expect(rep.report.overall(), tag + " report");
      tally.expect(rep.gca.dim == static_cast<std::size_t>(order), tag + " dimension");
      tally.expect(multiplier_deviation(rep, fs) < 1e-9, tag + " D(g)D(h) = phi D(gh)");
    }
  }
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{2, 3}, {2, 2}, {4}, {3, 3, 2}}) {
    const FactorSet trivial(orders, {});
    const auto rep = projective_rep(trivial);
    tally.expect(rep.gca.dim == 1, "trivial factor set gives dim > 1");
    for (const auto& d : rep.d) tally.expect(d.dim() == 1 && d.is_identity(), "trivial factor set D(g) != 1");
  }
  return tally.verdict("Z2xZ2, Z3xZ3 and trivial factor sets");
}

Verdict criterion6() {
  Tally tally;
  std::mt19937_64 rng(6006);
  std::normal_distribution<double> gauss;
  auto lambda = [&](int n, bool real) {
    std::vector<Complex> out;
    for (int j = 0; j < n; ++j) out.emplace_back(gauss(rng), real ? 0.0 : gauss(rng));
    return out;
  };
  auto relative_power = [](const LSpec& spec, std::int64_t order) {
    Mat l = Mat::Zero(static_cast<Eigen::Index>(spec.rep.dim), static_cast<Eigen::Index>(spec.rep.dim));
    Complex sum = 0.0;
    double scale = 0.0;
    for (std::size_t j = 0; j < spec.lambda.size(); ++j) {
      l += spec.lambda[j] * spec.rep.gens[j].to_dense();
      sum += std::pow(spec.lambda[j], static_cast<int>(order));
      scale += std::pow(std::abs(spec.lambda[j]), static_cast<double>(order));
    }
    return oracle::maxdiff(oracle::mpow(l, order), sum * oracle::id(static_cast<int>(l.rows()))) / scale;
  };
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const LSpec spec{lambda(n, false), clifford_generators(n)};
      tally.expect(relative_power(spec, 2) < 1e-9 && nth_power_check(spec).pass, "Clifford L^2 n=" + std::to_string(n));
    }
    for (std::int64_t big_n = 2; big_n <= 6; ++big_n) {
      for (int trial = 0; trial < 50; ++trial) {
        const LSpec spec{lambda(n, false), ordered_gca_generators(n, big_n)};
        tally.expect(relative_power(spec, big_n) < 1e-9 && nth_power_check(spec).pass,
                     "ordered L^N n=" + std::to_string(n) + " N=" + std::to_string(big_n));
      }
    }
  }
  auto check_diag = [&](const LSpec& spec, bool expect_fallback) {
    const auto d = diagonalize_l(spec);
    const Mat u = d.u;
    const int dim = static_cast<int>(spec.rep.dim);
    Mat l = Mat::Zero(dim, dim);
    double norm = 0.0;
    for (std::size_t j = 0; j < spec.lambda.size(); ++j) {
      l += spec.lambda[j] * spec.rep.gens[j].to_dense();
      norm += std::norm(spec.lambda[j]);
    }
    const Mat target = std::sqrt(norm) * spec.rep.gens[1].to_dense();
    tally.expect(oracle::maxdiff(u.adjoint() * u, oracle::id(dim)) < 1e-10, "U^dag U != I");
    tally.expect(oracle::maxdiff(u.inverse() * l * u, target) < 1e-10, "U^-1 L U != Lambda beta");
    tally.expect(d.fallback == expect_fallback, "fallback flag");
  };
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) check_diag(LSpec{lambda(n, true), clifford_generators(n)}, false);
    std::vector<Complex> degenerate(static_cast<std::size_t>(n), 0.0);
    degenerate[1] = -1.5;
    check_diag(LSpec{degenerate, clifford_generators(n)}, true);
  }
  return tally.verdict("n <= 5, N <= 6, 50 draws each, fallback included");
}

Verdict criterion7() {
  Tally tally;
  std::mt19937_64 rng(7007);
  for (int n = 2; n <= 8; ++n) {
    const Mat a = oracle::shift(n);
    const Mat b = oracle::clock(n);
    std::vector<Mat> ab;
    std::vector<Mat> ba;
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        ab.push_back(oracle::mpow(a, k) * oracle::mpow(b, l));
        ba.push_back(oracle::mpow(b, k) * oracle::mpow(a, l));
      }
    }
    for (int trial = 0; trial < 50; ++trial) {
      const Mat m = oracle::random_matrix(n, rng);
      const auto mu = schwinger_coeffs(m);
      const auto dec = ramakrishnan_decomposition(m);
      Mat via_mu = Mat::Zero(n, n);
      Mat via_c = Mat::Zero(n, n);
      double cross = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          via_mu += mu.mu(k, l) * ab[static_cast<std::size_t>(k * n + l)];
          via_c += dec.c(k, l) * ba[static_cast<std::size_t>(k * n + l)];
          cross = std::max(cross, std::abs(mu.mu(k, l) - oracle::root(-k * l, n) * dec.c(l, k)));
        }
      }
      tally.expect(oracle::maxdiff(via_mu, m) < 1e-10, "mu reconstruction N=" + std::to_string(n));
      tally.expect(oracle::maxdiff(via_c, m) < 1e-10, "C reconstruction N=" + std::to_string(n));
      tally.expect(cross < 1e-10, "cross relation N=" + std::to_string(n));
      tally.expect(dec.report.overall(), "library report N=" + std::to_string(n));
    }
    tally.expect(gram_identity_check(n).overall(), "Gram identity N=" + std::to_string(n));
  }
  return tally.verdict("N = 2..8, 50 matrices each");
}

Verdict criterion8() {
  Tally tally;
  std::mt19937_64 rng(8008);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::int64_t nu = 0; nu <= 3; ++nu) {
    const auto size = static_cast<Eigen::Index>(2 * nu + 1);
    for (int trial = 0; trial < 50; ++trial) {
      WignerTable table{nu, RealMatrix(size, size)};
      for (Eigen::Index i = 0; i < table.w.size(); ++i) table.w(i) = u(rng);
      const Mat h = wigner_forward(table);
      tally.expect(oracle::maxdiff(h, h.adjoint()) < 1e-12, "forward not Hermitian nu=" + std::to_string(nu));
      const auto back = wigner_inverse(h);
      tally.expect((back.table.w - table.w).cwiseAbs().maxCoeff() < 1e-9, "round trip nu=" + std::to_string(nu));
    }
    const Mat ones = wigner_forward(WignerTable{nu, RealMatrix::Ones(size, size)});
    tally.expect(oracle::maxdiff(ones, static_cast<double>(size) * oracle::id(static_cast<int>(size))) < 1e-12,
                 "w = 1 collapse nu=" + std::to_string(nu));
  }
  return tally.verdict("nu = 0..3, 50 tables each, collapse");
}

Verdict criterion9() {
  Tally tally;
  int supported = 0;
  int unsupported = 0;
  for (std::int64_t big_n : {2, 4, 6}) {
    const int nn = static_cast<int>(big_n);
    const Mat a = oracle::shift(nn);
    const Mat b = oracle::clock(nn);
    for (std::int64_t k = 0; k < big_n; ++k) {
      for (std::int64_t l = 0; l < big_n; ++l) {
        for (std::int64_t m = 1; m < big_n; ++m) {
          for (std::int64_t n = 0; n < big_n; ++n) {
            if (floor_mod(k * n - l * m, big_n) != 1) continue;
            const CanonicalParams p(k, l, m, n, big_n);
            const auto pair = canonical_pair(p);
            const std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) +
                                    "," + std::to_string(n) + ") mod " + std::to_string(big_n);
            tally.expect(pair.report.overall(), "pair report " + tag);
            tally.expect(pair.a.ratio_to(pair.b * pair.a * pair.b.adjoint()) == Phase(1, big_n) &&
                             pair.a.pow(big_n).is_identity() && pair.b.pow(big_n).is_identity(),
                         "exact A'B' relations " + tag);
            const Mat ap = oracle::root(-k * l, 2 * big_n) * oracle::mpow(a, k) * oracle::mpow(b, l);
            const Mat bp = oracle::root(-m * n, 2 * big_n) * oracle::mpow(a, m) * oracle::mpow(b, n);
            tally.expect(oracle::maxdiff(pair.a.to_dense(), ap) < 1e-12 && oracle::maxdiff(pair.b.to_dense(), bp) < 1e-12,
                         "A', B' differ from the oracle " + tag);
            try {
              const auto s = canonical_intertwiner(p);
              ++supported;
              const Mat sm = s.s;
              // Fit the unit scalars independently.
              const Mat sa = sm * a;
              const Mat asa = ap * sm;
              const Complex za = asa.conjugate().cwiseProduct(sa).sum() / std::abs(asa.conjugate().cwiseProduct(sa).sum());
              const Mat sb = sm * b;
              const Mat bsb = bp * sm;
              const Complex zb = bsb.conjugate().cwiseProduct(sb).sum() / std::abs(bsb.conjugate().cwiseProduct(sb).sum());
              tally.expect(oracle::maxdiff(sa, za * asa) < 1e-9, "||SA - zeta A'S|| " + tag);
              tally.expect(oracle::maxdiff(sb, zb * bsb) < 1e-9, "||SB - zeta B'S|| " + tag);
              tally.expect(sm.fullPivLu().rank() == nn, "S singular " + tag);
            } catch (const Error& e) {
              ++unsupported;
              tally.expect(e.code() == ErrorCode::UnsupportedTransform, "unexpected error " + tag);
            }
          }
        }
      }
    }
  }
  const auto sylvester = canonical_intertwiner(CanonicalParams(0, 1, 1, 0, 2));
  Mat expected(2, 2);
  expected << 1, 1, 1, -1;
  tally.expect(oracle::maxdiff(sylvester.s, expected) < 1e-12, "N=2 Sylvester S");
  return tally.verdict(std::to_string(supported) + " supported, " + std::to_string(unsupported) +
                       " reported unsupported");
}

Verdict criterion10() {
  Tally tally;
  std::mt19937_64 rng(10010);
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Flux, 3> f;
    for (auto& x : f) {
      x.q = 1 + static_cast<std::int64_t>(rng() % 8);
      x.p = static_cast<std::int64_t>(rng() % 17) - 8;
    }
    const MagneticLattice lat(f[0], f[1], f[2]);
    const auto rep = magnetic_translation_rep(lat);
    for (int j = 0; j < 3; ++j) {
      for (int k = j + 1; k < 3; ++k) {
        const auto& tj = rep.gens[static_cast<std::size_t>(j)];
        const auto& tk = rep.gens[static_cast<std::size_t>(k)];
        const auto ratio = (tj * tk).ratio_to(tk * tj);
        const Flux fl = lat.flux(j, k);
        tally.expect(ratio.has_value() && *ratio == Phase(-fl.p, fl.q),
                     "commutator phase trial " + std::to_string(trial));
      }
    }
    tally.expect(verify_gca(rep).overall(), "verify_gca trial " + std::to_string(trial));
  }
  const auto zero = magnetic_translation_rep(MagneticLattice({0, 1}, {0, 1}, {0, 1}));
  tally.expect(zero.dim == 1, "zero field dimension");
  for (const auto& g : zero.gens) tally.expect(g.is_identity(), "zero field generator");
  return tally.verdict("20 random flux configurations, zero field trivial");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Clifford reproduction", 1.0, criterion1},
      {2, "ordered-family reproduction", 5.0, criterion2},
      {3, "skew-normal correctness", 10.0, criterion3},
      {4, "general builder", 30.0, criterion4},
      {5, "projective representations", 5.0, criterion5},
      {6, "L-matrix identities", 10.0, criterion6},
      {7, "decomposition theorem", 10.0, criterion7},
      {8, "Wigner pair", 5.0, criterion8},
      {9, "canonical transformations", 20.0, criterion9},
      {10, "magnetic representations", 2.0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit;
    const bool pass = v.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d %s  %-28s %7.3f s (limit %4.0f s)  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.name,
                seconds, c.limit, v.detail.c_str(), in_time ? "" : " [over time limit]");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
