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

#ifndef QFDIV_GENERATORS_HPP
#define QFDIV_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>

#include "qfdiv/linalg.hpp"

namespace qfdiv {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// The 64-bit key is the user seed, the 128-bit counter is (block, stream):
/// every (seed, stream) pair is an independent stream, and a stream's output
/// depends only on (seed, stream, position). Normals use Box-Muller on 53-bit
/// uniforms. Streams are reproducible on one platform; transcendental
/// rounding means bit-equality across platforms is not promised.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  static constexpr std::string_view kVersion = "philox4x32-10/v1";

  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept;

  /// The raw 10-round bijection.
  static Counter block(Counter ctr, Key key) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform on (0, 1].
  double uniform_open_low() noexcept { return 1.0 - uniform(); }
  /// Standard complex normal: real and imaginary parts N(0, 1/2).
  Complex complex_normal() noexcept;
  /// Standard real normal.
  double normal() noexcept;

 private:
  void refill() noexcept;

  Key key_;
  Counter counter_;
  Counter buffer_{};
  int used_ = 4;
};

enum class StateKind {
  FullRank,
  FixedRank,
  Pure,
  CommutingPair,
  PerturbationSequence,
  RandomUnitary,
};

std::string_view to_string(StateKind kind) noexcept;
/// Accepts "full-rank", "fixed-rank", "pure", "commuting", "perturbation",
/// "unitary" (and the underscore spellings). Throws InvalidConfig.
StateKind parse_state_kind(std::string_view text);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  Eigen::Index dim = 2;
  Eigen::Index rank = 2;
  StateKind kind = StateKind::FullRank;
  std::uint64_t stream = 0;
};

/// Throws InvalidConfig unless 1 <= rank <= dim.
void validate_config(const GeneratorConfig& config);

/// FullRank / FixedRank: G G^dagger / tr with G a dim x rank complex Ginibre
/// matrix (FullRank forces rank = dim). Pure: |psi><psi| with psi a
/// normalized complex normal vector. Other kinds throw InvalidConfig.
DensityOperator random_state(const GeneratorConfig& config);

/// Haar unitary by QR of a complex Ginibre matrix with the R-diagonal phases
/// divided out.
ComplexMatrix random_unitary(const GeneratorConfig& config);

/// Two states diagonal in one random basis. Eigenvalue vectors are drawn
/// from the simplex by normalized exponentials; when rank < dim each state
/// keeps `rank` randomly placed nonzero weights.
struct CommutingPair {
  DensityOperator rho;
  DensityOperator sigma;
  ComplexMatrix basis;      ///< columns: shared eigenbasis
  RealVector rho_weights;   ///< rho = basis diag(rho_weights) basis^dagger
  RealVector sigma_weights;
};
CommutingPair commuting_pair(const GeneratorConfig& config);

/// Convex mixture (1 - t) sigma + t tau, re-validated.
DensityOperator mix(const DensityOperator& sigma, const DensityOperator& tau,
                    double t);

/// Terms of a sequence rho_n -> sigma used by convergence checks.
enum class SequenceShape {
  MixingLinear,     ///< (1 - 1/n) sigma + (1/n) tau
  MixingQuadratic,  ///< (1 - 1/n^2) sigma + (1/n^2) tau
  Rotation,         ///< exp(-i H/n) sigma exp(i H/n), H a random Hermitian
};
struct PerturbationSequence {
  DensityOperator sigma;
  DensityOperator tau;
  ComplexMatrix generator;  ///< Hermitian H for Rotation
  SequenceShape shape = SequenceShape::MixingLinear;

  /// rho_n for n >= 1.
  DensityOperator term(int n) const;
};
/// sigma, tau full rank from the config's stream; H from the next stream.
PerturbationSequence perturbation_sequence(const GeneratorConfig& config,
                                           SequenceShape shape);

}  // namespace qfdiv

#endif  // QFDIV_GENERATORS_HPP
