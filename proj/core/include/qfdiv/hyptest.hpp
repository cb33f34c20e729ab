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

#ifndef QFDIV_HYPTEST_HPP
#define QFDIV_HYPTEST_HPP

#include <span>
#include <vector>

#include "qfdiv/extended_real.hpp"
#include "qfdiv/linalg.hpp"

namespace qfdiv {

/// Symmetric binary test of rho (null) against sigma (alternative).
struct HypothesisInstance {
  DensityOperator rho;
  DensityOperator sigma;
  double pi0 = 0.5;
  double pi1 = 0.5;
};

/// Throws DimensionMismatch, or InvalidPriors unless pi0, pi1 >= 0 and
/// pi0 + pi1 = 1 within 1e-12.
HypothesisInstance make_instance(DensityOperator rho, DensityOperator sigma,
                                 double pi0 = 0.5, double pi1 = 0.5);

struct ErrorProbabilities {
  double alpha = 0;  ///< tr[Pi rho^n], deciding sigma under rho
  double beta = 0;   ///< tr[(1 - Pi) sigma^n], deciding rho under sigma
  /// pi0 alpha + pi1 beta
  double bayes(const HypothesisInstance& inst) const {
    return inst.pi0 * alpha + inst.pi1 * beta;
  }
};

/// Type I / II errors of the two-outcome test {1 - Pi, Pi} on n copies.
/// Throws NotAProjection (Pi not Hermitian idempotent within 1e-9),
/// DimensionCapExceeded, DimensionMismatch.
ErrorProbabilities error_probabilities(const ComplexMatrix& projector,
                                       const HypothesisInstance& inst, int n,
                                       Eigen::Index cap = kDefaultDimensionCap);

struct HelstromResult {
  double p_min = 0;        ///< (1 - ||pi1 sigma^n - pi0 rho^n||_1) / 2
  ComplexMatrix projector; ///< support of the positive part
  double bayes_error = 0;  ///< Err(projector) from the type I / II errors
};

/// Minimum Bayesian error on n copies and the Holevo-Helstrom projection.
HelstromResult helstrom_error(const HypothesisInstance& inst, int n,
                              Eigen::Index cap = kDefaultDimensionCap);

/// ln tr[rho^{1-s} sigma^s] with rho^0 read as the support projection.
double chernoff_objective(const SpectralDecomposition& sd_rho,
                          const SpectralDecomposition& sd_sigma, double s);

struct ChernoffResult {
  ExtendedReal value;  ///< C = -min_s ln tr[rho^{1-s} sigma^s]
  double s_star = 0;   ///< minimizer (0 when value is +inf or rho == sigma)
};

/// Quantum Chernoff bound. A 101-point grid brackets the minimum of the
/// convex objective, then golden-section search refines it to |ds| < 1e-8.
/// Orthogonal supports give +inf; identical inputs give exactly 0.
ChernoffResult chernoff(const DensityOperator& rho,
                        const DensityOperator& sigma);
ExtendedReal chernoff_bound(const DensityOperator& rho,
                            const DensityOperator& sigma);

/// min over unordered pairs i != j of C(rho_i, rho_j).
/// Throws FewerThanTwoStates, DimensionMismatch.
ExtendedReal multiple_chernoff(std::span<const DensityOperator> states);

struct ExponentSample {
  int n = 0;
  double p_min = 0;
  ExtendedReal exponent;  ///< -(1/n) ln p_min, +inf when p_min == 0
};

/// Exact P_{e,min,n} and its exponent for n = 1..n_max.
std::vector<ExponentSample> empirical_exponent_trace(
    const HypothesisInstance& inst, int n_max,
    Eigen::Index cap = kDefaultDimensionCap);

}  // namespace qfdiv

#endif  // QFDIV_HYPTEST_HPP
