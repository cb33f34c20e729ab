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

#include "qfdiv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qfdiv/error.hpp"

namespace qfdiv {
namespace {

// Eigenvalues closer than this are one degenerate block.
constexpr double kTieTolerance = 1e-12;
// Components below this modulus are skipped when fixing the phase.
constexpr double kPhaseCutoff = 1e-10;

void require_square(const ComplexMatrix& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::NotSquare,
                std::string(where) + ": expected a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void canonicalize_phase(Eigen::Ref<ComplexVector> v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v(k));
    if (mag > kPhaseCutoff) {
      v *= std::conj(v(k)) / mag;
      v(k) = Complex(std::abs(v(k)), 0.0);
      return;
    }
  }
}

bool lexicographically_less(const ComplexVector& a, const ComplexVector& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k).real() != b(k).real()) return a(k).real() < b(k).real();
    if (a(k).imag() != b(k).imag()) return a(k).imag() < b(k).imag();
  }
  return false;
}

// Modified Gram-Schmidt on columns [first, last).
void reorthonormalize(ComplexMatrix& vecs, Eigen::Index first,
                      Eigen::Index last) {
  for (Eigen::Index j = first; j < last; ++j) {
    for (Eigen::Index k = first; k < j; ++k) {
      const Complex proj = vecs.col(k).dot(vecs.col(j));
      vecs.col(j) -= proj * vecs.col(k);
    }
    vecs.col(j).normalize();
  }
}

}  // namespace

double hermitian_deviation(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigen");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure,
                "self-adjoint eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DensityOperator validate_state(const ComplexMatrix& matrix,
                               const Tolerances& tol) {
  require_square(matrix, "validate_state");
  if (!matrix.allFinite()) {
    throw Error(ErrorCode::NonFinite, "validate_state: non-finite entry");
  }
  StateCorrections corr;
  corr.hermitian_deviation = hermitian_deviation(matrix);
  if (corr.hermitian_deviation > tol.hermitian) {
    throw Error(ErrorCode::NotHermitian,
                "max |A - A^dagger| = " + std::to_string(corr.hermitian_deviation));
  }
  ComplexMatrix h = (matrix + matrix.adjoint()) * 0.5;
  const HermitianEigen eig = hermitian_eigen(h);
  const double min_eig = eig.eigenvalues.minCoeff();
  if (min_eig < -tol.psd) {
    throw Error(ErrorCode::NotPositive,
                "smallest eigenvalue " + std::to_string(min_eig));
  }
  const double trace = h.trace().real();
  corr.trace_deviation = std::abs(trace - 1.0);
  if (corr.trace_deviation > tol.trace) {
    throw Error(ErrorCode::TraceDeviation, "trace " + std::to_string(trace));
  }
  if (min_eig < 0.0) {
    RealVector clipped = eig.eigenvalues;
    for (Eigen::Index i = 0; i < clipped.size(); ++i) {
      if (clipped(i) < 0.0) {
        corr.clipped_mass += -clipped(i);
        clipped(i) = 0.0;
      }
    }
    h = eig.eigenvectors * clipped.cast<Complex>().asDiagonal() *
        eig.eigenvectors.adjoint();
  }
  const double new_trace = h.trace().real();
  if (new_trace != 1.0) h /= new_trace;
  return DensityOperator(std::move(h), corr);
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

SpectralDecomposition spectral_decompose(const DensityOperator& rho) {
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  const Eigen::Index d = rho.dim();

  SpectralDecomposition sd;
  sd.eigenvalues.resize(d);
  sd.eigenvectors.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    sd.eigenvalues(i) = std::max(0.0, eig.eigenvalues(d - 1 - i));
    sd.eigenvectors.col(i) = eig.eigenvectors.col(d - 1 - i);
  }
  sd.eigenvalues /= sd.eigenvalues.sum();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (sd.eigenvalues(i) <= kRankCutoff) sd.eigenvalues(i) = 0.0;
  }
  sd.eigenvalues /= sd.eigenvalues.sum();

  // Degenerate blocks: common value, re-orthonormalized, canonical order.
  Eigen::Index first = 0;
  while (first < d) {
    Eigen::Index last = first + 1;
    while (last < d && sd.eigenvalues(last - 1) - sd.eigenvalues(last) <=
                           kTieTolerance) {
      ++last;
    }
    if (last - first > 1) {
      const double mean =
          sd.eigenvalues.segment(first, last - first).mean();
      sd.eigenvalues.segment(first, last - first).setConstant(mean);
      reorthonormalize(sd.eigenvectors, first, last);
    }
    for (Eigen::Index k = first; k < last; ++k) {
      canonicalize_phase(sd.eigenvectors.col(k));
    }
    if (last - first > 1) {
      std::vector<ComplexVector> block;
      for (Eigen::Index k = first; k < last; ++k) {
        block.emplace_back(sd.eigenvectors.col(k));
      }
      std::sort(block.begin(), block.end(), lexicographically_less);
      for (Eigen::Index k = first; k < last; ++k) {
        sd.eigenvectors.col(k) = block[static_cast<std::size_t>(k - first)];
      }
    }
    first = last;
  }
  sd.rank = (sd.eigenvalues.array() > 0.0).count();
  return sd;
}

ComplexMatrix support_projector(const SpectralDecomposition& sd) {
  const Eigen::Index d = sd.dim();
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (sd.eigenvalues(i) > 0.0) {
      p += sd.eigenvectors.col(i) * sd.eigenvectors.col(i).adjoint();
    }
  }
  return p;
}

ComplexMatrix kernel_projector(const SpectralDecomposition& sd) {
  const Eigen::Index d = sd.dim();
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (sd.eigenvalues(i) == 0.0) {
      p += sd.eigenvectors.col(i) * sd.eigenvectors.col(i).adjoint();
    }
  }
  return p;
}

ScalarFunction ScalarFunction::power(double p) {
  ScalarFunction g;
  g.apply = [p](double t) { return std::pow(t, p); };
  if (p >= 0.0) g.value_at_zero = 0.0;
  g.name = "power(" + std::to_string(p) + ")";
  return g;
}

ScalarFunction ScalarFunction::log() {
  ScalarFunction g;
  g.apply = [](double t) { return std::log(t); };
  g.skip_zero = true;
  g.name = "log";
  return g;
}

ScalarFunction ScalarFunction::identity() {
  ScalarFunction g;
  g.apply = [](double t) { return t; };
  g.value_at_zero = 0.0;
  g.name = "identity";
  return g;
}

ComplexMatrix matrix_function_hermitian(const SpectralDecomposition& sd,
                                        const ScalarFunction& g) {
  const Eigen::Index d = sd.dim();
  RealVector values(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double r = sd.eigenvalues(i);
    double v = 0.0;
    if (r == 0.0) {
      if (g.value_at_zero) {
        v = *g.value_at_zero;
      } else if (!g.skip_zero) {
        throw Error(ErrorCode::FunctionUndefinedAtEigenvalue,
                    g.name + " at eigenvalue 0");
      }
    } else {
      v = g.apply(r);
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::FunctionUndefinedAtEigenvalue,
                    g.name + " at eigenvalue " + std::to_string(r));
      }
    }
    values(i) = v;
  }
  return sd.eigenvectors * values.cast<Complex>().asDiagonal() *
         sd.eigenvectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityOperator tensor_power(const DensityOperator& rho, int n,
                             Eigen::Index cap) {
  if (n < 1) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "tensor_power needs n >= 1, got " + std::to_string(n));
  }
  Eigen::Index total = 1;
  for (int k = 0; k < n; ++k) {
    if (total > cap / rho.dim()) {
      throw Error(ErrorCode::DimensionCapExceeded,
                  std::to_string(rho.dim()) + "^" + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
    }
    total *= rho.dim();
  }
  ComplexMatrix out = rho.matrix();
  for (int k = 1; k < n; ++k) out = kron(out, rho.matrix());
  return DensityOperator(std::move(out), StateCorrections{});
}

double trace_norm(const ComplexMatrix& m, double tol_hermitian) {
  require_square(m, "trace_norm");
  const double dev = hermitian_deviation(m);
  if (dev > tol_hermitian) {
    throw Error(ErrorCode::NotHermitian,
                "trace_norm: max |A - A^dagger| = " + std::to_string(dev));
  }
  const HermitianEigen eig = hermitian_eigen((m + m.adjoint()) * 0.5);
  return eig.eigenvalues.cwiseAbs().sum();
}

}  // namespace qfdiv
