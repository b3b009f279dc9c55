#include "gcakit/canonical.hpp"

#include <string>

#include "gcakit/errors.hpp"
#include "gcakit/weylpairs.hpp"

namespace gcakit {

CanonicalParams::CanonicalParams(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t n,
                                 std::int64_t order)
    : k_(k), l_(l), m_(m), n_(n), order_(order) {
  if (order < 2 || order % 2 != 0) {
    throw Error(ErrorCode::InvalidInput, "canonical transformations need an even N >= 2");
  }
  for (const auto x : {k, l, m, n}) {
    if (x < 0 || x >= order) throw Error(ErrorCode::InvalidInput, "parameters must lie in [0, N)");
  }
  if (floor_mod(k * n - l * m, order) != 1 % order) {
    throw Error(ErrorCode::BadDeterminant, "kn - lm = " + std::to_string(k * n - l * m) + " is not 1 mod " +
                                               std::to_string(order));
  }
}

CanonicalPair canonical_pair(const CanonicalParams& p) {
  const std::int64_t big_n = p.order();
  const MonomialMatrix a = shift(big_n);
  const MonomialMatrix b = clock(big_n);
  MonomialMatrix a2 = Phase(-p.k() * p.l(), 2 * big_n) * (a.pow(p.k()) * b.pow(p.l()));
  MonomialMatrix b2 = Phase(-p.m() * p.n(), 2 * big_n) * (a.pow(p.m()) * b.pow(p.n()));

  VerificationReport report;
  const Phase omega = Phase::root(big_n);
  const auto ratio = (a2 * b2).ratio_to(b2 * a2);
  const bool commute_ok = ratio && *ratio == omega;
  report.add("commutation", commute_ok,
             ratio ? "A'B' = " + ratio->to_string() + " B'A'" : "A'B' not proportional to B'A'",
             commute_ok ? 0.0 : 1.0);
  const auto pa = a2.pow(big_n).scalar_value();
  const auto pb = b2.pow(big_n).scalar_value();
  report.add("order(A')", a2.pow(big_n).is_identity(), "A'^N = " + (pa ? pa->to_string() : std::string("?")));
  report.add("order(B')", b2.pow(big_n).is_identity(), "B'^N = " + (pb ? pb->to_string() : std::string("?")));
  return CanonicalPair{std::move(a2), std::move(b2), std::move(report)};
}

Intertwiner canonical_intertwiner(const CanonicalParams& p, double tol) {
  const std::int64_t big_n = p.order();
  if (p.is_identity()) {
    Intertwiner out{DenseMatrix::Identity(big_n, big_n), {1.0, 0.0}, {1.0, 0.0}, {}};
    out.report.add("identity", true, "S = I");
    return out;
  }
  if (p.m() == 0) {
    throw Error(ErrorCode::UnsupportedTransform, "intertwiner formula needs m != 0");
  }
  DenseMatrix s(big_n, big_n);
  for (std::int64_t x = 0; x < big_n; ++x) {
    for (std::int64_t y = 0; y < big_n; ++y) {
      s(x, y) = Phase(-(p.n() * x * x - 2 * x * y + p.k() * y * y), 2 * p.m() * big_n).value();
    }
  }
  const CanonicalPair pair = canonical_pair(p);
  const DenseMatrix a = shift(big_n).to_dense();
  const DenseMatrix b = clock(big_n).to_dense();
  const ScalarFit fa = fit_unit_scalar(s * a, pair.a.to_dense() * s);
  const ScalarFit fb = fit_unit_scalar(s * b, pair.b.to_dense() * s);

  VerificationReport report;
  report.add("intertwine(A)", fa.residual < tol, "max|SA - zeta A'S| = " + format_deviation(fa.residual),
             fa.residual);
  report.add("intertwine(B)", fb.residual < tol, "max|SB - zeta B'S| = " + format_deviation(fb.residual),
             fb.residual);
  const DenseMatrix gram = s.adjoint() * s;
  const double scale = gram.trace().real() / static_cast<double>(big_n);
  const double spread = max_abs_diff(gram, scale * DenseMatrix::Identity(big_n, big_n)) / scale;
  report.add("invertible", spread < tol, "max|S^dag S - cI| / c = " + format_deviation(spread), spread);

  if (!report.overall()) {
    const auto& failed = report.checks()[*report.first_failure()];
    throw Error(ErrorCode::UnsupportedTransform, "(" + std::to_string(p.k()) + "," + std::to_string(p.l()) + "," +
                                                     std::to_string(p.m()) + "," + std::to_string(p.n()) +
                                                     ") mod " + std::to_string(big_n) + ": " + failed.name +
                                                     " fails, " + failed.detail);
  }
  return Intertwiner{std::move(s), fa.zeta, fb.zeta, std::move(report)};
}

}  // namespace gcakit
