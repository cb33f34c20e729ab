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

#include "qfdiv/ns.hpp"

#include "qfdiv/error.hpp"

namespace qfdiv {

NSPair build_ns(const SpectralDecomposition& sd_rho,
                const SpectralDecomposition& sd_sigma) {
  if (sd_rho.dim() != sd_sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "build_ns: dims " + std::to_string(sd_rho.dim()) + " and " +
                    std::to_string(sd_sigma.dim()));
  }
  NSPair ns;
  ns.dim = sd_rho.dim();
  ns.r = sd_rho.eigenvalues;
  ns.s = sd_sigma.eigenvalues;
  ns.overlaps =
      (sd_rho.eigenvectors.adjoint() * sd_sigma.eigenvectors).cwiseAbs2();
  ns.overlaps = (ns.overlaps.array() < kOverlapCutoff)
                    .select(0.0, ns.overlaps.array())
                    .matrix();
  ns.P = ns.r.asDiagonal() * ns.overlaps;
  ns.Q = ns.overlaps * ns.s.asDiagonal();
  return ns;
}

bool ns_equal(const NSPair& ns, double tol) {
  return (ns.P - ns.Q).cwiseAbs().maxCoeff() <= tol;
}

bool ns_absolutely_continuous(const NSPair& ns) {
  for (Eigen::Index j = 0; j < ns.dim; ++j) {
    if (ns.s(j) != 0.0) continue;
    for (Eigen::Index i = 0; i < ns.dim; ++i) {
      if (ns.r(i) > 0.0 && ns.overlaps(i, j) > kOverlapCutoff) return false;
    }
  }
  return true;
}

double ns_mass_q_where_p_zero(const NSPair& ns) {
  double mass = 0.0;
  for (Eigen::Index i = 0; i < ns.dim; ++i) {
    if (ns.r(i) == 0.0) mass += ns.Q.row(i).sum();
  }
  return mass;
}

double ns_mass_p_where_q_zero(const NSPair& ns) {
  double mass = 0.0;
  for (Eigen::Index j = 0; j < ns.dim; ++j) {
    if (ns.s(j) == 0.0) mass += ns.P.col(j).sum();
  }
  return mass;
}

}  // namespace qfdiv
