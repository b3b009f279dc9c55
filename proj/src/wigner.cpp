#include "gcakit/wigner.hpp"

#include <algorithm>

#include "gcakit/errors.hpp"
#include "gcakit/schwinger.hpp"
#include "gcakit/weylpairs.hpp"

namespace gcakit {

namespace {

constexpr double kRealTol = 1e-12;
constexpr double kHermitianTol = 1e-9;

}  // namespace

WignerTable WignerTable::from_complex(const DenseMatrix& w) {
  if (w.rows() != w.cols() || w.rows() % 2 == 0) {
    throw Error(ErrorCode::DimensionMismatch, "Wigner table must be square of odd size");
  }
  if (w.imag().cwiseAbs().maxCoeff() > kRealTol) {
    throw Error(ErrorCode::NotReal, "Wigner table has imaginary entries");
  }
  return WignerTable{(w.rows() - 1) / 2, w.real()};
}

MonomialMatrix wigner_word(std::int64_t nu, std::int64_t xi, std::int64_t eta) {
  const WeylPair pair = symmetric_pair(nu);
  const std::int64_t n = pair.order;
  const std::int64_t half = (n + 1) / 2;
  return Phase(xi * eta * half, n) * (pair.b.pow(xi) * pair.a.pow(eta));
}

DenseMatrix wigner_forward(const WignerTable& table) {
  const std::int64_t nu = table.nu;
  const std::int64_t n = 2 * nu + 1;
  if (table.w.rows() != n || table.w.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "Wigner table size does not match nu");
  }
  DenseMatrix h = DenseMatrix::Zero(n, n);
  for (std::int64_t xi = -nu; xi <= nu; ++xi) {
    for (std::int64_t eta = -nu; eta <= nu; ++eta) {
      Complex v{0.0, 0.0};
      for (std::int64_t k = -nu; k <= nu; ++k) {
        for (std::int64_t l = -nu; l <= nu; ++l) {
          v += table.w(k + nu, l + nu) * Phase(-xi * k - eta * l, n).value();
        }
      }
      v /= static_cast<double>(n);
      const MonomialMatrix word = wigner_word(nu, xi, eta);
      const auto target = word.target();
      const auto phases = word.phases();
      for (std::int64_t c = 0; c < n; ++c) {
        h(static_cast<Eigen::Index>(target[static_cast<std::size_t>(c)]), c) +=
            v * phases[static_cast<std::size_t>(c)].value();
      }
    }
  }
  return h;
}

WignerInverse wigner_inverse(const DenseMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "expected a non-empty square matrix");
  }
  if (h.rows() % 2 == 0) throw Error(ErrorCode::EvenDimension, "Wigner transform needs odd dimension");
  if (!is_hermitian(h, kHermitianTol * std::max(1.0, max_abs(h)))) {
    throw Error(ErrorCode::NotHermitian, "input matrix is not Hermitian");
  }
  const std::int64_t n = h.rows();
  const std::int64_t nu = (n - 1) / 2;
  DenseMatrix v(n, n);
  for (std::int64_t xi = -nu; xi <= nu; ++xi) {
    for (std::int64_t eta = -nu; eta <= nu; ++eta) {
      v(xi + nu, eta + nu) = trace_inner(wigner_word(nu, xi, eta), h) / static_cast<double>(n);
    }
  }
  RealMatrix w(n, n);
  double residue = 0.0;
  for (std::int64_t k = -nu; k <= nu; ++k) {
    for (std::int64_t l = -nu; l <= nu; ++l) {
      Complex acc{0.0, 0.0};
      for (std::int64_t xi = -nu; xi <= nu; ++xi) {
        for (std::int64_t eta = -nu; eta <= nu; ++eta) {
          acc += v(xi + nu, eta + nu) * Phase(xi * k + eta * l, n).value();
        }
      }
      acc /= static_cast<double>(n);
      w(k + nu, l + nu) = acc.real();
      residue = std::max(residue, std::abs(acc.imag()));
    }
  }
  return WignerInverse{WignerTable{nu, std::move(w)}, residue};
}

}  // namespace gcakit
