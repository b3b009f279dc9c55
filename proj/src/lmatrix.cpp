#include "gcakit/lmatrix.hpp"

#include <cmath>
#include <string>

#include "gcakit/errors.hpp"

namespace gcakit {

namespace {

constexpr double kSigmaTol = 1e-12;
constexpr double kDiagTol = 1e-10;
constexpr double kPowerTol = 1e-9;
constexpr double kRealTol = 1e-12;

std::int64_t family_order(const Representation& rep) {
  if (rep.family == Family::Clifford) return 2;
  if (rep.family == Family::Ordered) return rep.spec.t().nhat();
  throw Error(ErrorCode::InvalidInput, "operation needs the Clifford or ordered family");
}

Representation family_rep(const Representation& like, int n) {
  if (like.family == Family::Clifford) return clifford_generators(n);
  return ordered_gca_generators(n, family_order(like));
}

}  // namespace

DenseMatrix l_matrix(const LSpec& spec) {
  if (spec.lambda.size() != spec.rep.gens.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(spec.lambda.size()) + " coefficients for " +
                                                  std::to_string(spec.rep.gens.size()) + " generators");
  }
  const auto d = static_cast<Eigen::Index>(spec.rep.dim);
  DenseMatrix l = DenseMatrix::Zero(d, d);
  for (std::size_t j = 0; j < spec.lambda.size(); ++j) {
    const auto& g = spec.rep.gens[j];
    const auto target = g.target();
    const auto phases = g.phases();
    for (std::size_t c = 0; c < g.dim(); ++c) {
      l(static_cast<Eigen::Index>(target[c]), static_cast<Eigen::Index>(c)) += spec.lambda[j] * phases[c].value();
    }
  }
  return l;
}

bool is_clifford_family(const Representation& rep) {
  return rep.family == Family::Clifford || (rep.family == Family::Ordered && rep.spec.t().nhat() == 2);
}

SigmaResult sigma_operation(const LSpec& inner, const std::array<Complex, 3>& lam_new) {
  const int n = inner.rep.spec.n();
  if (n % 2 == 0) throw Error(ErrorCode::EvenGeneratorCount, "sigma operation needs an odd generator count");
  if (inner.lambda.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from generator count");
  }
  const int m2 = n - 1;  // 2m
  const Representation three = family_rep(inner.rep, 3);
  const LSpec l3{{lam_new[0], lam_new[1], lam_new[2]}, three};
  const DenseMatrix l3_matrix = l_matrix(l3);
  const auto small = static_cast<Eigen::Index>(three.dim);

  DenseMatrix substituted = tensor(inner.rep.gens[static_cast<std::size_t>(m2)].to_dense(), l3_matrix);
  for (int j = 0; j < m2; ++j) {
    const DenseMatrix ej = inner.rep.gens[static_cast<std::size_t>(j)].to_dense();
    substituted += inner.lambda[static_cast<std::size_t>(j)] * tensor(ej, DenseMatrix::Identity(small, small));
  }

  std::vector<Complex> lambda(inner.lambda.begin(), inner.lambda.begin() + m2);
  lambda.insert(lambda.end(), lam_new.begin(), lam_new.end());
  LSpec outer{std::move(lambda), family_rep(inner.rep, n + 2)};
  const double deviation = max_abs_diff(substituted, l_matrix(outer));
  return SigmaResult{std::move(outer), std::move(substituted), deviation, deviation <= kSigmaTol};
}

Diagonalization diagonalize_l(const LSpec& spec) {
  if (!is_clifford_family(spec.rep)) {
    throw Error(ErrorCode::InvalidInput, "closed-form diagonalization needs the Clifford family");
  }
  const int n = spec.rep.spec.n();
  if (n < 2) throw Error(ErrorCode::InvalidInput, "diagonalization needs at least two generators");
  std::vector<double> lam;
  for (const auto& z : spec.lambda) {
    if (std::abs(z.imag()) > kRealTol) throw Error(ErrorCode::NotReal, "coefficients must be real");
    lam.push_back(z.real());
  }
  const DenseMatrix l = l_matrix(spec);
  double sum_sq = 0.0;
  for (const double x : lam) sum_sq += x * x;
  const double big_lambda = std::sqrt(sum_sq);
  if (big_lambda == 0.0) throw Error(ErrorCode::ZeroVector, "all coefficients vanish");

  const auto& gens = spec.rep.gens;
  const DenseMatrix beta = gens[1].to_dense();
  int axis = 1;
  bool fallback = false;
  if (big_lambda + lam[1] <= 1e-6 * big_lambda) {
    fallback = true;
    axis = 0;
    for (int j = 0; j < n; ++j) {
      if (j != 1 && lam[static_cast<std::size_t>(j)] > lam[static_cast<std::size_t>(axis)]) axis = j;
    }
    if (axis == 1) axis = 0;
  }
  const DenseMatrix e_axis = gens[static_cast<std::size_t>(axis)].to_dense();
  const double denom = std::sqrt(2.0 * big_lambda * (big_lambda + lam[static_cast<std::size_t>(axis)]));
  DenseMatrix u = (l + big_lambda * e_axis) / denom;
  if (fallback) {
    // (e_axis + beta)/sqrt(2) is Hermitian, unitary and rotates e_axis onto beta.
    u = u * ((e_axis + beta) / std::sqrt(2.0));
  }
  const DenseMatrix eig = big_lambda * beta;

  VerificationReport report;
  const auto d = u.rows();
  const double unitarity = max_abs_diff(u.adjoint() * u, DenseMatrix::Identity(d, d));
  report.add("unitary", unitarity < kDiagTol, "max|U^dag U - I| = " + format_deviation(unitarity), unitarity);
  const double diag = max_abs_diff(u.adjoint() * l * u, eig) / big_lambda;
  report.add("diagonalizes", diag < kDiagTol, "max|U^-1 L U - Lambda beta| / Lambda = " + format_deviation(diag),
             diag);
  const double herm = max_abs_diff(u, u.adjoint());
  if (!fallback) {
    report.add("hermitian", herm < kDiagTol, "max|U - U^dag| = " + format_deviation(herm), herm);
  }
  return Diagonalization{std::move(u), eig, big_lambda, fallback, axis, std::move(report)};
}

PowerCheck nth_power_check(const LSpec& spec) {
  const std::int64_t order = family_order(spec.rep);
  const DenseMatrix l = l_matrix(spec);
  DenseMatrix power = DenseMatrix::Identity(l.rows(), l.cols());
  for (std::int64_t i = 0; i < order; ++i) power = power * l;
  Complex scalar{0.0, 0.0};
  double scale = 0.0;
  for (const auto& z : spec.lambda) {
    scalar += std::pow(z, static_cast<int>(order));
    scale += std::pow(std::abs(z), static_cast<double>(order));
  }
  const DenseMatrix expected = scalar * DenseMatrix::Identity(l.rows(), l.cols());
  const double deviation = scale > 0.0 ? max_abs_diff(power, expected) / scale : max_abs(power);
  return PowerCheck{scalar, deviation, deviation <= kPowerTol, order};
}

}  // namespace gcakit
