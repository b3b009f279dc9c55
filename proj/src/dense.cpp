#include "gcakit/dense.hpp"

#include <cstdlib>
#include <string>

#include "gcakit/errors.hpp"

namespace gcakit {

double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("GCAKIT_TOL")) {
      try {
        const double v = std::stod(env);
        if (v > 0) return v;
      } catch (const std::exception&) {
      }
    }
    return 1e-10;
  }();
  return tol;
}

DenseMatrix tensor(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "inner dimensions " + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + " differ");
  }
  return a * b;
}

DenseMatrix adjoint(const DenseMatrix& a) { return a.adjoint(); }

Complex trace_inner(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "trace_inner needs square matrices of equal size");
  }
  // Tr[x^dagger y] = sum_ij conj(x_ij) y_ij
  return (x.conjugate().cwiseProduct(y)).sum();
}

double max_abs(const DenseMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "shapes differ");
  }
  return max_abs(a - b);
}

bool is_hermitian(const DenseMatrix& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const DenseMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a.adjoint() * a - DenseMatrix::Identity(a.rows(), a.cols())) <= tol;
}

ScalarFit fit_unit_scalar(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "shapes differ");
  }
  const Complex overlap = (b.conjugate().cwiseProduct(a)).sum();
  const Complex zeta = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return {zeta, max_abs(a - zeta * b)};
}

}  // namespace gcakit
