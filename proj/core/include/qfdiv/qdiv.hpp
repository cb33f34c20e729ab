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

#ifndef QFDIV_QDIV_HPP
#define QFDIV_QDIV_HPP

#include <vector>

#include "qfdiv/extended_real.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/linalg.hpp"

namespace qfdiv {

/// Relative tolerance for merging equal eigenvalues r_i / s_j.
inline constexpr double kModularMergeTolerance = 1e-10;

/// Support masses computed from matrix traces at or below this are zero.
inline constexpr double kBoundaryMassCutoff = 1e-12;

/// Point-mass spectral data of the relative modular operator
/// Delta_{rho,sigma} : X -> rho X sigma^{-1} seen from sqrt(sigma).
///
/// Every index pair with r_i > 0, s_j > 0 is an eigenvector |u_i><v_j| with
/// eigenvalue r_i / s_j. Equal eigenvalues are merged; `multiplicity` counts
/// the merged pairs and `weight` sums s_j |<u_i|v_j>|^2 over them.
struct RelativeModularSpectrum {
  struct Eigenpair {
    double eigenvalue = 0;
    double weight = 0;
    int multiplicity = 0;
  };
  std::vector<Eigenpair> eigenpairs;  ///< ascending eigenvalue
  double kernel_mass = 0;             ///< weight of the eigenvalue 0

  double total_weight() const;
};

/// Throws DimensionMismatch.
RelativeModularSpectrum relative_modular_spectrum(
    const SpectralDecomposition& sd_rho, const SpectralDecomposition& sd_sigma);

/// D_f(rho||sigma) via the classical f-divergence of the NS distributions.
ExtendedReal quantum_f_divergence_ns(const DensityOperator& rho,
                                     const DensityOperator& sigma,
                                     const DivergenceFunction& f);

/// D_f(rho||sigma) from the spectral measure of Delta_{rho,sigma}:
///
///   sum_{lambda > 0} f(lambda) w(lambda)
///     + f(0) tr(sigma Pi_rho^perp) + f'(inf) tr(rho Pi_sigma^perp)
///
/// where the two boundary traces are computed from support projectors.
ExtendedReal quantum_f_divergence_modular(const DensityOperator& rho,
                                          const DensityOperator& sigma,
                                          const DivergenceFunction& f);

/// tr(sigma Pi_rho^perp), the mass of sigma off the support of rho.
double mass_off_support(const DensityOperator& sigma,
                        const SpectralDecomposition& sd_rho);

// Named divergences (NS route, natural logarithm).

/// Umegaki relative entropy tr rho (ln rho - ln sigma).
ExtendedReal umegaki(const DensityOperator& rho, const DensityOperator& sigma);
/// Petz-Renyi (1/(a-1)) ln tr rho^a sigma^{1-a}; a -> 1 recovers umegaki but
/// a == 1 itself is rejected with AlphaOutOfRange.
ExtendedReal petz_renyi(const DensityOperator& rho, const DensityOperator& sigma,
                        double alpha);
/// (1/2) sum (sqrt P - sqrt Q)^2, always in [0, 1].
double hellinger_sq_q(const DensityOperator& rho, const DensityOperator& sigma);
ExtendedReal hellinger_alpha_q(const DensityOperator& rho,
                               const DensityOperator& sigma, double alpha);
/// sum |P - Q|, always in [0, 2].
double total_variation_q(const DensityOperator& rho,
                         const DensityOperator& sigma);
ExtendedReal chi_sq_q(const DensityOperator& rho, const DensityOperator& sigma);

// Matrix-function oracles. These never touch NS distributions.

/// tr rho (ln rho - ln sigma) with the principal-support logarithm; finite
/// only when supp rho is inside supp sigma (caller's responsibility).
double umegaki_matrix_oracle(const DensityOperator& rho,
                             const DensityOperator& sigma);
/// tr rho^a sigma^{1-a}.
double power_trace_oracle(const DensityOperator& rho,
                          const DensityOperator& sigma, double alpha);

}  // namespace qfdiv

#endif  // QFDIV_QDIV_HPP
