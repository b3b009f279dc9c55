#pragma once

#include <Eigen/Dense>

#include "gcakit/phase.hpp"

namespace gcakit {

using DenseMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// 1e-10 unless overridden through the GCAKIT_TOL environment variable.
double default_tolerance();

/// Kronecker product; row index is i_a * rows(b) + i_b.
DenseMatrix tensor(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);
/// Tr[x^dagger y]
Complex trace_inner(const DenseMatrix& x, const DenseMatrix& y);

double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
bool is_hermitian(const DenseMatrix& a, double tol = default_tolerance());
bool is_unitary(const DenseMatrix& a, double tol = default_tolerance());

/// Best unit-modulus zeta minimising max|a - zeta b| in the least-squares
/// sense, together with the resulting max-abs residual.
struct ScalarFit {
  Complex zeta;
  double residual;
};
ScalarFit fit_unit_scalar(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace gcakit
