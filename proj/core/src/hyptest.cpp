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

#include "qfdiv/hyptest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfdiv/error.hpp"

namespace qfdiv {
namespace {

constexpr double kPriorTolerance = 1e-12;
constexpr double kProjectionTolerance = 1e-9;
constexpr int kChernoffGridPoints = 101;
constexpr double kGoldenSectionWidth = 1e-8;
// tr(Pi_rho Pi_sigma) at or below this means orthogonal supports.
constexpr double kOrthogonalSupportCutoff = 1e-12;

void require_projection(const ComplexMatrix& p) {
  if (p.rows() != p.cols()) {
    throw Error(ErrorCode::NotAProjection, "projector is not square");
  }
  const double herm = hermitian_deviation(p);
  const double idem = (p * p - p).cwiseAbs().maxCoeff();
  if (herm > kProjectionTolerance || idem > kProjectionTolerance) {
    throw Error(ErrorCode::NotAProjection,
                "|P - P^dagger| = " + std::to_string(herm) +
                    ", |P^2 - P| = " + std::to_string(idem));
  }
}

}  // namespace

HypothesisInstance make_instance(DensityOperator rho, DensityOperator sigma,
                                 double pi0, double pi1) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "make_instance");
  }
  if (!(pi0 >= 0.0 && pi1 >= 0.0) ||
      std::abs(pi0 + pi1 - 1.0) > kPriorTolerance) {
    throw Error(ErrorCode::InvalidPriors, "priors " + std::to_string(pi0) +
                                              ", " + std::to_string(pi1));
  }
  return {std::move(rho), std::move(sigma), pi0, pi1};
}

ErrorProbabilities error_probabilities(const ComplexMatrix& projector,
                                       const HypothesisInstance& inst, int n,
                                       Eigen::Index cap) {
  const DensityOperator rho_n = tensor_power(inst.rho, n, cap);
  const DensityOperator sigma_n = tensor_power(inst.sigma, n, cap);
  if (projector.rows() != rho_n.dim() || projector.cols() != rho_n.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "projector has dimension " + std::to_string(projector.rows()) +
                    ", states have " + std::to_string(rho_n.dim()));
  }
  require_projection(projector);
  ErrorProbabilities out;
  out.alpha = (projector * rho_n.matrix()).trace().real();
  out.beta = sigma_n.matrix().trace().real() -
             (projector * sigma_n.matrix()).trace().real();
  return out;
}

HelstromResult helstrom_error(const HypothesisInstance& inst, int n,
                              Eigen::Index cap) {
  const DensityOperator rho_n = tensor_power(inst.rho, n, cap);
  const DensityOperator sigma_n = tensor_power(inst.sigma, n, cap);
  const ComplexMatrix a =
      inst.pi1 * sigma_n.matrix() - inst.pi0 * rho_n.matrix();
  const HermitianEigen eig = hermitian_eigen((a + a.adjoint()) * 0.5);

  HelstromResult out;
  const Eigen::Index d = a.rows();
  out.projector = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (eig.eigenvalues(k) > 0.0) {
      out.projector += eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint();
    }
  }
  const double norm = eig.eigenvalues.cwiseAbs().sum();
  out.p_min = std::max(0.0, 0.5 * (1.0 - norm));
  const double alpha = (out.projector * rho_n.matrix()).trace().real();
  const double beta = 1.0 - (out.projector * sigma_n.matrix()).trace().real();
  out.bayes_error = inst.pi0 * alpha + inst.pi1 * beta;
  return out;
}

double chernoff_objective(const SpectralDecomposition& sd_rho,
                          const SpectralDecomposition& sd_sigma, double s) {
  const ComplexMatrix a =
      matrix_function_hermitian(sd_rho, ScalarFunction::power(1.0 - s));
  const ComplexMatrix b =
      matrix_function_hermitian(sd_sigma, ScalarFunction::power(s));
  const double tr = (a * b).trace().real();
  if (tr <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(tr);
}

ChernoffResult chernoff(const DensityOperator& rho,
                        const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "chernoff_bound");
  }
  if (rho.matrix() == sigma.matrix()) return {ExtendedReal::zero(), 0.0};

  const SpectralDecomposition sd_rho = spectral_decompose(rho);
  const SpectralDecomposition sd_sigma = spectral_decompose(sigma);
  const double support_overlap =
      (support_projector(sd_rho) * support_projector(sd_sigma)).trace().real();
  if (support_overlap <= kOrthogonalSupportCutoff) {
    return {ExtendedReal::plus_infinity(), 0.0};
  }
  const auto g = [&](double s) {
    return chernoff_objective(sd_rho, sd_sigma, s);
  };

  double best_s = 0.0;
  double best_g = std::numeric_limits<double>::infinity();
  int best_k = 0;
  for (int k = 0; k < kChernoffGridPoints; ++k) {
    const double s = static_cast<double>(k) / (kChernoffGridPoints - 1);
    const double v = g(s);
    if (v < best_g) {
      best_g = v;
      best_s = s;
      best_k = k;
    }
  }
  const double step = 1.0 / (kChernoffGridPoints - 1);
  double lo = std::max(0.0, (best_k - 1) * step);
  double hi = std::min(1.0, (best_k + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  while (hi - lo > kGoldenSectionWidth) {
    if (g1 <= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double g_mid = g(mid);
  if (g_mid < best_g) {
    best_g = g_mid;
    best_s = mid;
  }
  if (std::isinf(best_g)) return {ExtendedReal::plus_infinity(), best_s};
  // tr[rho^{1-s} sigma^s] <= 1, so C >= 0; clamp round-off below zero.
  return {ExtendedReal::finite(std::max(0.0, -best_g)), best_s};
}

ExtendedReal chernoff_bound(const DensityOperator& rho,
                            const DensityOperator& sigma) {
  return chernoff(rho, sigma).value;
}

ExtendedReal multiple_chernoff(std::span<const DensityOperator> states) {
  if (states.size() < 2) {
    throw Error(ErrorCode::FewerThanTwoStates,
                "multiple_chernoff needs at least two states");
  }
  ExtendedReal best = ExtendedReal::plus_infinity();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const ExtendedReal c = chernoff_bound(states[i], states[j]);
      if (c < best) best = c;
    }
  }
  return best;
}

std::vector<ExponentSample> empirical_exponent_trace(
    const HypothesisInstance& inst, int n_max, Eigen::Index cap) {
  if (n_max < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "n_max must be >= 1");
  }
  // Fail before any work when the largest power is out of reach.
  Eigen::Index total = 1;
  for (int k = 0; k < n_max; ++k) {
    if (total > cap / inst.rho.dim()) {
      throw Error(ErrorCode::DimensionCapExceeded,
                  "dim^" + std::to_string(n_max) + " exceeds cap " +
                      std::to_string(cap));
    }
    total *= inst.rho.dim();
  }
  std::vector<ExponentSample> out;
  for (int n = 1; n <= n_max; ++n) {
    const double p = helstrom_error(inst, n, cap).p_min;
    ExponentSample sample{n, p, ExtendedReal::plus_infinity()};
    if (p > 0.0) sample.exponent = ExtendedReal::finite(-std::log(p) / n);
    out.push_back(sample);
  }
  return out;
}

}  // namespace qfdiv
