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

#include "qfdiv/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "qfdiv/error.hpp"

namespace qfdiv {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) noexcept {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

ComplexMatrix ginibre(Philox4x32& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix haar_unitary(Philox4x32& rng, Eigen::Index d) {
  const ComplexMatrix z = ginibre(rng, d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

DensityOperator ginibre_state(Philox4x32& rng, Eigen::Index dim,
                              Eigen::Index rank) {
  const ComplexMatrix g = ginibre(rng, dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate_state(rho);
}

RealVector simplex_weights(Philox4x32& rng, Eigen::Index dim,
                           Eigen::Index rank) {
  std::vector<Eigen::Index> slots(static_cast<std::size_t>(dim));
  std::iota(slots.begin(), slots.end(), Eigen::Index{0});
  // Partial Fisher-Yates: the first `rank` slots carry weight.
  for (Eigen::Index k = 0; k < rank && rank < dim; ++k) {
    const auto span = static_cast<double>(dim - k);
    auto pick = k + static_cast<Eigen::Index>(rng.uniform() * span);
    if (pick >= dim) pick = dim - 1;
    std::swap(slots[static_cast<std::size_t>(k)],
              slots[static_cast<std::size_t>(pick)]);
  }
  RealVector w = RealVector::Zero(dim);
  for (Eigen::Index k = 0; k < rank; ++k) {
    w(slots[static_cast<std::size_t>(k)]) = -std::log(rng.uniform_open_low());
  }
  if (w.sum() == 0.0) w(slots[0]) = 1.0;
  return w / w.sum();
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      counter_{0u, 0u, static_cast<std::uint32_t>(stream),
               static_cast<std::uint32_t>(stream >> 32)} {}

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

void Philox4x32::refill() noexcept {
  buffer_ = block(counter_, key_);
  if (++counter_[0] == 0) ++counter_[1];
  used_ = 0;
}

Philox4x32::result_type Philox4x32::operator()() noexcept {
  if (used_ == 4) refill();
  return buffer_[static_cast<std::size_t>(used_++)];
}

double Philox4x32::uniform() noexcept {
  const std::uint64_t hi = (*this)();
  const std::uint64_t lo = (*this)();
  const std::uint64_t bits = ((hi << 32) | lo) >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

Complex Philox4x32::complex_normal() noexcept {
  const double radius = std::sqrt(-std::log(uniform_open_low()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double Philox4x32::normal() noexcept {
  const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
  return radius * std::cos(2.0 * std::numbers::pi * uniform());
}

std::string_view to_string(StateKind kind) noexcept {
  switch (kind) {
    case StateKind::FullRank: return "full-rank";
    case StateKind::FixedRank: return "fixed-rank";
    case StateKind::Pure: return "pure";
    case StateKind::CommutingPair: return "commuting";
    case StateKind::PerturbationSequence: return "perturbation";
    case StateKind::RandomUnitary: return "unitary";
  }
  return "unknown";
}

StateKind parse_state_kind(std::string_view text) {
  if (text == "full-rank" || text == "full_rank") return StateKind::FullRank;
  if (text == "fixed-rank" || text == "fixed_rank") return StateKind::FixedRank;
  if (text == "pure") return StateKind::Pure;
  if (text == "commuting" || text == "commuting_pair") {
    return StateKind::CommutingPair;
  }
  if (text == "perturbation" || text == "perturbation_sequence") {
    return StateKind::PerturbationSequence;
  }
  if (text == "unitary" || text == "random_unitary") {
    return StateKind::RandomUnitary;
  }
  throw Error(ErrorCode::InvalidConfig,
              "unknown state kind '" + std::string(text) + "'");
}

void validate_config(const GeneratorConfig& config) {
  if (config.dim < 1) {
    throw Error(ErrorCode::InvalidConfig,
                "dim must be >= 1, got " + std::to_string(config.dim));
  }
  if (config.rank < 1 || config.rank > config.dim) {
    throw Error(ErrorCode::InvalidConfig,
                "rank must lie in [1, dim], got " + std::to_string(config.rank));
  }
}

DensityOperator random_state(const GeneratorConfig& config) {
  validate_config(config);
  Philox4x32 rng(config.seed, config.stream);
  switch (config.kind) {
    case StateKind::FullRank:
      return ginibre_state(rng, config.dim, config.dim);
    case StateKind::FixedRank:
      return ginibre_state(rng, config.dim, config.rank);
    case StateKind::Pure: {
      ComplexVector psi = ginibre(rng, config.dim, 1).col(0);
      psi.normalize();
      return validate_state(psi * psi.adjoint());
    }
    default:
      break;
  }
  throw Error(ErrorCode::InvalidConfig,
              "random_state cannot produce kind " +
                  std::string(to_string(config.kind)));
}

ComplexMatrix random_unitary(const GeneratorConfig& config) {
  validate_config(config);
  Philox4x32 rng(config.seed, config.stream);
  return haar_unitary(rng, config.dim);
}

CommutingPair commuting_pair(const GeneratorConfig& config) {
  validate_config(config);
  Philox4x32 rng(config.seed, config.stream);
  ComplexMatrix basis = haar_unitary(rng, config.dim);
  RealVector wr = simplex_weights(rng, config.dim, config.rank);
  RealVector ws = simplex_weights(rng, config.dim, config.rank);
  const auto build = [&basis](const RealVector& w) {
    return validate_state(basis * w.cast<Complex>().asDiagonal() *
                          basis.adjoint());
  };
  DensityOperator rho = build(wr);
  DensityOperator sigma = build(ws);
  return {std::move(rho), std::move(sigma), std::move(basis), std::move(wr),
          std::move(ws)};
}

DensityOperator mix(const DensityOperator& sigma, const DensityOperator& tau,
                    double t) {
  if (sigma.dim() != tau.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "mix");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "mixing weight must lie in [0,1]");
  }
  return validate_state((1.0 - t) * sigma.matrix() + t * tau.matrix());
}

DensityOperator PerturbationSequence::term(int n) const {
  if (n < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "sequence index must be >= 1");
  }
  const double x = 1.0 / static_cast<double>(n);
  switch (shape) {
    case SequenceShape::MixingLinear: return mix(sigma, tau, x);
    case SequenceShape::MixingQuadratic: return mix(sigma, tau, x * x);
    case SequenceShape::Rotation: break;
  }
  const HermitianEigen eig = hermitian_eigen(generator);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -eig.eigenvalues(k) * x));
  }
  const ComplexMatrix u =
      eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
  const ComplexMatrix rotated = u * sigma.matrix() * u.adjoint();
  return validate_state((rotated + rotated.adjoint()) * 0.5);
}

PerturbationSequence perturbation_sequence(const GeneratorConfig& config,
                                           SequenceShape shape) {
  validate_config(config);
  Philox4x32 rng(config.seed, config.stream);
  DensityOperator sigma = ginibre_state(rng, config.dim, config.dim);
  DensityOperator tau = ginibre_state(rng, config.dim, config.dim);
  const ComplexMatrix z = ginibre(rng, config.dim, config.dim);
  return {std::move(sigma), std::move(tau), (z + z.adjoint()) * 0.5, shape};
}

}  // namespace qfdiv
