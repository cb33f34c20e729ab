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

#ifndef QFDIV_TESTS_FIXTURES_HPP
#define QFDIV_TESTS_FIXTURES_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qfdiv/generators.hpp"
#include "qfdiv/linalg.hpp"

namespace qfdiv::fixtures {

inline DensityOperator diag_state(std::initializer_list<double> w) {
  RealVector v(static_cast<Eigen::Index>(w.size()));
  Eigen::Index k = 0;
  for (double x : w) v(k++) = x;
  return validate_state(v.cast<Complex>().asDiagonal());
}

inline DensityOperator pure_state(const ComplexVector& psi) {
  const ComplexVector u = psi.normalized();
  return validate_state(u * u.adjoint());
}

inline DensityOperator ket0() {
  return pure_state(ComplexVector::Unit(2, 0));
}
inline DensityOperator ket1() {
  return pure_state(ComplexVector::Unit(2, 1));
}
inline DensityOperator ket_plus() {
  ComplexVector v(2);
  v << 1.0, 1.0;
  return pure_state(v);
}
inline DensityOperator maximally_mixed(Eigen::Index d) {
  return validate_state(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

inline DensityOperator random_full(std::uint64_t seed, Eigen::Index d,
                                   std::uint64_t stream = 0) {
  return random_state({seed, d, d, StateKind::FullRank, stream});
}
inline DensityOperator random_rank(std::uint64_t seed, Eigen::Index d,
                                   Eigen::Index r, std::uint64_t stream = 0) {
  return random_state({seed, d, r, StateKind::FixedRank, stream});
}
inline DensityOperator random_pure(std::uint64_t seed, Eigen::Index d,
                                   std::uint64_t stream = 0) {
  return random_state({seed, d, 1, StateKind::Pure, stream});
}

inline std::vector<double> to_vector(const RealVector& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace qfdiv::fixtures

#endif  // QFDIV_TESTS_FIXTURES_HPP
