#include "gcakit/schwinger.hpp"

#include <string>

#include "gcakit/errors.hpp"
#include "gcakit/weylpairs.hpp"

namespace gcakit {

namespace {

DenseMatrix expand(const DenseMatrix& coeffs, bool clock_first) {
  const auto n = coeffs.rows();
  DenseMatrix out = DenseMatrix::Zero(n, n);
  const MonomialMatrix a = shift(n);
  const MonomialMatrix b = clock(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const MonomialMatrix word = clock_first ? b.pow(k) * a.pow(l) : a.pow(k) * b.pow(l);
      const auto target = word.target();
      const auto phases = word.phases();
      for (Eigen::Index c = 0; c < n; ++c) {
        out(static_cast<Eigen::Index>(target[static_cast<std::size_t>(c)]), c) +=
            coeffs(k, l) * phases[static_cast<std::size_t>(c)].value();
      }
    }
  }
  return out;
}

void require_square(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "expected a non-empty square matrix");
  }
}

}  // namespace

MonomialMatrix schwinger_word(std::int64_t n, std::int64_t k, std::int64_t l) {
  return shift(n).pow(k) * clock(n).pow(l);
}

Complex trace_inner(const MonomialMatrix& x, const DenseMatrix& m) {
  if (static_cast<Eigen::Index>(x.dim()) != m.rows() || m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "trace inner product of differently sized matrices");
  }
  Complex acc{0.0, 0.0};
  const auto target = x.target();
  const auto phases = x.phases();
  for (std::size_t c = 0; c < x.dim(); ++c) {
    acc += std::conj(phases[c].value()) * m(static_cast<Eigen::Index>(target[c]), static_cast<Eigen::Index>(c));
  }
  return acc;
}

SchwingerCoeffs schwinger_coeffs(const DenseMatrix& m) {
  require_square(m);
  const auto n = m.rows();
  DenseMatrix mu(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      mu(k, l) = trace_inner(schwinger_word(n, k, l), m) / static_cast<double>(n);
    }
  }
  const double err = max_abs_diff(expand(mu, false), m);
  return SchwingerCoeffs{n, std::move(mu), err};
}

DecompositionC ramakrishnan_decomposition(const DenseMatrix& m, double tol) {
  require_square(m);
  const auto n = m.rows();
  DenseMatrix r(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) r(k, j) = m(k, (k + j) % n);
  }
  DenseMatrix c = sylvester_inverse(n) * r;

  VerificationReport report;
  const double recon = max_abs_diff(expand(c, true), m);
  report.add("reconstruction", recon < tol, "max|M - sum c_kl B^k A^l| = " + format_deviation(recon), recon);

  const SchwingerCoeffs sc = schwinger_coeffs(m);
  double cross = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const Complex expected = Phase(-k * l, n).value() * c(l, k);
      cross = std::max(cross, std::abs(sc.mu(k, l) - expected));
    }
  }
  report.add("cross-relation", cross < tol, "max|mu_kl - w^{-kl} c_lk| = " + format_deviation(cross), cross);
  return DecompositionC{std::move(c), std::move(r), std::move(report)};
}

VerificationReport gram_identity_check(std::int64_t n) {
  VerificationReport report;
  std::vector<MonomialMatrix> words;
  for (std::int64_t k = 0; k < n; ++k) {
    for (std::int64_t l = 0; l < n; ++l) words.push_back(schwinger_word(n, k, l));
  }
  std::size_t failures = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (!trace_inner(words[i], words[j]).equals_integer(i == j ? n : 0)) ++failures;
    }
  }
  report.add("gram(" + std::to_string(n) + ")", failures == 0,
             std::to_string(failures) + " of " + std::to_string(words.size() * words.size()) +
                 " inner products differ from N delta delta",
             static_cast<double>(failures));
  return report;
}

}  // namespace gcakit
