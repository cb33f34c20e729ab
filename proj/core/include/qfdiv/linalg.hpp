// Copyright 2026 The qfdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFDIV_LINALG_HPP
#define QFDIV_LINALG_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace qfdiv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues at or below this (after normalization) are exactly zero and
/// their eigenvectors span the kernel.
inline constexpr double kRankCutoff = 1e-12;

/// Default cap on d^n for tensor powers.
inline constexpr Eigen::Index kDefaultDimensionCap = 4096;

struct Tolerances {
  double hermitian = 1e-10;  ///< max |A_ij - conj(A_ji)|
  double psd = 1e-10;        ///< smallest eigenvalue may be >= -psd
  double trace = 1e-10;      ///< |tr A - 1|
};

/// What validate_state had to change to produce an exact state.
struct StateCorrections {
  double hermitian_deviation = 0.0;  ///< max |A - A^dagger| entry
  double clipped_mass = 0.0;         ///< sum of negative eigenvalues removed
  double trace_deviation = 0.0;      ///< |tr A - 1| before renormalizing
};

/// A Hermitian, positive semidefinite, unit-trace matrix.
///
/// Only validate_state (and operations that preserve the invariants, such as
/// tensor_power) construct one, so holders can rely on the invariants.
class DensityOperator {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const StateCorrections& corrections() const noexcept { return corrections_; }

 private:
  DensityOperator(ComplexMatrix m, StateCorrections c)
      : matrix_(std::move(m)), corrections_(c) {}

  friend DensityOperator validate_state(const ComplexMatrix&, const Tolerances&);
  friend DensityOperator tensor_power(const DensityOperator&, int,
                                      Eigen::Index);

  ComplexMatrix matrix_;
  StateCorrections corrections_;
};

/// Eigen-data of a state: rho = sum_i eigenvalues[i] |u_i><u_i| with u_i the
/// i-th column of eigenvectors.
///
/// Eigenvalues are descending and exactly zero below kRankCutoff; ties are
/// ordered lexicographically by the canonicalized eigenvector (first
/// component of modulus > 1e-12 made real positive). Kernel vectors are kept.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
  Eigen::Index rank = 0;

  Eigen::Index dim() const noexcept { return eigenvalues.size(); }
  /// sum_i r_i |u_i><u_i|
  ComplexMatrix reconstruct() const;
};

/// Checks a candidate matrix and returns the nearest exact state: Hermitian
/// part, negative eigenvalues in [-psd, 0) clipped to zero, trace scaled to 1.
///
/// Throws NotSquare, NonFinite, NotHermitian, NotPositive, TraceDeviation.
DensityOperator validate_state(const ComplexMatrix& matrix,
                               const Tolerances& tol = {});

SpectralDecomposition spectral_decompose(const DensityOperator& rho);

/// Projection onto the support, sum over r_i > 0 of |u_i><u_i|.
ComplexMatrix support_projector(const SpectralDecomposition& sd);
/// Projection onto the kernel, the complement of support_projector.
ComplexMatrix kernel_projector(const SpectralDecomposition& sd);

/// A real function applied to eigenvalues.
///
/// At a zero eigenvalue the declared value_at_zero is used. When it is empty
/// the eigenvalue is either skipped (skip_zero, the principal-support
/// convention used for log) or FunctionUndefinedAtEigenvalue is thrown.
struct ScalarFunction {
  std::function<double(double)> apply;
  std::optional<double> value_at_zero;
  bool skip_zero = false;
  std::string name;

  /// t^p; p > 0 maps 0 to 0, p == 0 maps 0 to 0 (so rho^0 is the support
  /// projection), p < 0 is undefined at 0.
  static ScalarFunction power(double p);
  static ScalarFunction log();
  static ScalarFunction sqrt() { return power(0.5); }
  static ScalarFunction identity();
};

ComplexMatrix matrix_function_hermitian(const SpectralDecomposition& sd,
                                        const ScalarFunction& g);

/// rho^{(x) n}; throws DimensionCapExceeded when dim^n > cap.
DensityOperator tensor_power(const DensityOperator& rho, int n,
                             Eigen::Index cap = kDefaultDimensionCap);

/// Sum of absolute eigenvalues of a Hermitian matrix. Throws NotHermitian.
double trace_norm(const ComplexMatrix& m, double tol_hermitian = 1e-10);

/// Eigenvalues (ascending) and eigenvectors of an arbitrary Hermitian
/// matrix, without any state-specific cleanup.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// max_ij |m_ij - conj(m_ji)|
double hermitian_deviation(const ComplexMatrix& m);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qfdiv

#endif  // QFDIV_LINALG_HPP
