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

#ifndef QFDIV_NS_HPP
#define QFDIV_NS_HPP

#include "qfdiv/linalg.hpp"

namespace qfdiv {

/// Overlaps |<u_i|v_j>|^2 below this are exactly zero.
inline constexpr double kOverlapCutoff = 1e-12;

/// Default max-entry tolerance for deciding P == Q.
inline constexpr double kNsEqualTolerance = 1e-9;

/// Nussbaum-Szkola distributions of a pair (rho, sigma) on the index set
/// I x I, with the spectral data they were built from:
///
///   P(i,j) = r_i |<u_i|v_j>|^2,   Q(i,j) = s_j |<u_i|v_j>|^2.
struct NSPair {
  Eigen::Index dim = 0;
  RealMatrix overlaps;  ///< (i,j) -> |<u_i|v_j>|^2
  RealVector r;         ///< eigenvalues of rho
  RealVector s;         ///< eigenvalues of sigma
  RealMatrix P;
  RealMatrix Q;
};

/// Throws DimensionMismatch when the decompositions differ in size.
NSPair build_ns(const SpectralDecomposition& sd_rho,
                const SpectralDecomposition& sd_sigma);

/// max_ij |P(i,j) - Q(i,j)| <= tol. Equivalent to rho == sigma.
bool ns_equal(const NSPair& ns, double tol = kNsEqualTolerance);

/// P << Q, i.e. no cell with r_i > 0, s_j = 0 and a nonzero overlap.
/// Equivalent to supp rho contained in supp sigma.
bool ns_absolutely_continuous(const NSPair& ns);

/// Q(P = 0): mass of Q on cells with r_i = 0.
double ns_mass_q_where_p_zero(const NSPair& ns);
/// P(Q = 0): mass of P on cells with s_j = 0.
double ns_mass_p_where_q_zero(const NSPair& ns);

}  // namespace qfdiv

#endif  // QFDIV_NS_HPP
