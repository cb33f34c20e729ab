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

#include "qfdiv/qdiv.hpp"

#include <algorithm>
#include <cmath>

#include "qfdiv/error.hpp"
#include "qfdiv/ns.hpp"

namespace qfdiv {

double RelativeModularSpectrum::total_weight() const {
  CompensatedSum sum;
  for (const auto& e : eigenpairs) sum.add(e.weight);
  sum.add(kernel_mass);
  return sum.get();
}

RelativeModularSpectrum relative_modular_spectrum(
    const SpectralDecomposition& sd_rho,
    const SpectralDecomposition& sd_sigma) {
  if (sd_rho.dim() != sd_sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "relative_modular_spectrum: dims " +
                    std::to_string(sd_rho.dim()) + " and " +
                    std::to_string(sd_sigma.dim()));
  }
  const Eigen::Index d = sd_rho.dim();
  const RealMatrix overlaps =
      (sd_rho.eigenvectors.adjoint() * sd_sigma.eigenvectors).cwiseAbs2();

  struct Raw {
    double lambda;
    double weight;
  };
  std::vector<Raw> raw;
  raw.reserve(static_cast<std::size_t>(d * d));
  CompensatedSum kernel;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double ri = sd_rho.eigenvalues(i);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double sj = sd_sigma.eigenvalues(j);
      if (sj == 0.0) continue;
      if (ri == 0.0) {
        kernel.add(sj * overlaps(i, j));
      } else {
        raw.push_back({ri / sj, sj * overlaps(i, j)});
      }
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Raw& a, const Raw& b) { return a.lambda < b.lambda; });

  RelativeModularSpectrum spec;
  spec.kernel_mass = kernel.get();
  std::size_t k = 0;
  while (k < raw.size()) {
    const double anchor = raw[k].lambda;
    CompensatedSum lambda_sum;
    CompensatedSum weight_sum;
    int count = 0;
    while (k < raw.size() &&
           raw[k].lambda - anchor <= kModularMergeTolerance * anchor) {
      lambda_sum.add(raw[k].lambda);
      weight_sum.add(raw[k].weight);
      ++count;
      ++k;
    }
    spec.eigenpairs.push_back(
        {lambda_sum.get() / count, weight_sum.get(), count});
  }
  return spec;
}

double mass_off_support(const DensityOperator& sigma,
                        const SpectralDecomposition& sd_rho) {
  if (sigma.dim() != sd_rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "mass_off_support");
  }
  const double mass =
      (sigma.matrix() * kernel_projector(sd_rho)).trace().real();
  return mass <= kBoundaryMassCutoff ? 0.0 : std::min(mass, 1.0);
}

ExtendedReal quantum_f_divergence_ns(const DensityOperator& rho,
                                     const DensityOperator& sigma,
                                     const DivergenceFunction& f) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "quantum_f_divergence_ns");
  }
  const NSPair ns = build_ns(spectral_decompose(rho), spectral_decompose(sigma));
  return ns_f_divergence(ns, f);
}

ExtendedReal quantum_f_divergence_modular(const DensityOperator& rho,
                                          const DensityOperator& sigma,
                                          const DivergenceFunction& f) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "quantum_f_divergence_modular");
  }
  const SpectralDecomposition sd_rho = spectral_decompose(rho);
  const SpectralDecomposition sd_sigma = spectral_decompose(sigma);
  const RelativeModularSpectrum spec =
      relative_modular_spectrum(sd_rho, sd_sigma);

  CompensatedSum integral;
  ExtendedReal infinite_terms;
  for (const auto& e : spec.eigenpairs) {
    if (e.weight == 0.0) continue;
    const double v = f(e.eigenvalue);
    if (std::isfinite(v)) {
      integral.add(v * e.weight);
    } else {
      infinite_terms += ExtendedReal::from_double(v).scaled(e.weight);
    }
  }
  ExtendedReal out = ExtendedReal::from_double(integral.get());
  out += infinite_terms;
  out += f.f_at_zero().scaled(mass_off_support(sigma, sd_rho));
  out += f.f_prime_at_infinity().scaled(mass_off_support(rho, sd_sigma));
  return out;
}

ExtendedReal umegaki(const DensityOperator& rho, const DensityOperator& sigma) {
  return quantum_f_divergence_ns(rho, sigma, builtin("kl"));
}

ExtendedReal petz_renyi(const DensityOperator& rho, const DensityOperator& sigma,
                        double alpha) {
  require_alpha(alpha);
  return renyi_from_power_divergence(
      quantum_f_divergence_ns(rho, sigma, builtin("renyi_alpha", alpha)),
      alpha);
}

double hellinger_sq_q(const DensityOperator& rho,
                      const DensityOperator& sigma) {
  return quantum_f_divergence_ns(rho, sigma, builtin("hellinger_sq")).value();
}

ExtendedReal hellinger_alpha_q(const DensityOperator& rho,
                               const DensityOperator& sigma, double alpha) {
  return quantum_f_divergence_ns(rho, sigma, builtin("hellinger_alpha", alpha));
}

double total_variation_q(const DensityOperator& rho,
                         const DensityOperator& sigma) {
  return quantum_f_divergence_ns(rho, sigma, builtin("total_variation"))
      .value();
}

ExtendedReal chi_sq_q(const DensityOperator& rho,
                      const DensityOperator& sigma) {
  return quantum_f_divergence_ns(rho, sigma, builtin("chi_sq"));
}

double umegaki_matrix_oracle(const DensityOperator& rho,
                             const DensityOperator& sigma) {
  const auto log_rho =
      matrix_function_hermitian(spectral_decompose(rho), ScalarFunction::log());
  const auto log_sigma = matrix_function_hermitian(spectral_decompose(sigma),
                                                   ScalarFunction::log());
  return (rho.matrix() * (log_rho - log_sigma)).trace().real();
}

double power_trace_oracle(const DensityOperator& rho,
                          const DensityOperator& sigma, double alpha) {
  const auto a = matrix_function_hermitian(spectral_decompose(rho),
                                           ScalarFunction::power(alpha));
  const auto b = matrix_function_hermitian(spectral_decompose(sigma),
                                           ScalarFunction::power(1.0 - alpha));
  return (a * b).trace().real();
}

}  // namespace qfdiv
