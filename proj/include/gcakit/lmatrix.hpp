#pragma once

#include <array>
#include <vector>

#include "gcakit/dense.hpp"
#include "gcakit/report.hpp"
#include "gcakit/repbuilder.hpp"

namespace gcakit {

struct LSpec {
  std::vector<Complex> lambda;
  Representation rep;
};

/// sum_j lambda_j e_j. Throws DimensionMismatch if the counts differ.
DenseMatrix l_matrix(const LSpec& spec);

/// True for the Clifford family and the ordered family at N = 2.
bool is_clifford_family(const Representation& rep);

struct SigmaResult {
  LSpec spec;               // 2m+3 generators
  DenseMatrix substituted;  // block substitution applied to the inner L-matrix
  double deviation = 0.0;   // max |substituted - l_matrix(spec)|
  bool pass = false;        // deviation <= 1e-12
};

/// Replaces lambda_1..lambda_2m by lambda_j I and lambda_{2m+1} by L^(3)(lam_new).
/// Throws EvenGeneratorCount for an even inner count and InvalidInput for a
/// General-family representation.
SigmaResult sigma_operation(const LSpec& inner, const std::array<Complex, 3>& lam_new);

struct Diagonalization {
  DenseMatrix u;
  DenseMatrix eig;              // Lambda * beta
  double lambda_norm = 0.0;
  bool fallback = false;        // Lambda + lambda_2 ~ 0: another generator was used
  int axis = 1;                 // 0-based index of the generator used as the axis
  VerificationReport report;
};

/// U = (L + Lambda beta) / sqrt(2 Lambda (Lambda + lambda_2)) with beta = e_2.
/// Throws NotReal, ZeroVector, InvalidInput (non-Clifford family or n < 2).
Diagonalization diagonalize_l(const LSpec& spec);

struct PowerCheck {
  Complex scalar;           // sum_j lambda_j^N
  double deviation = 0.0;   // max |L^N - scalar I| / sum_j |lambda_j|^N
  bool pass = false;        // deviation <= 1e-9
  std::int64_t order = 2;
};

/// L^N = (sum lambda_j^N) I for the ordered family of order N.
PowerCheck nth_power_check(const LSpec& spec);

}  // namespace gcakit
