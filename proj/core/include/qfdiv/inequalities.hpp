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

#ifndef QFDIV_INEQUALITIES_HPP
#define QFDIV_INEQUALITIES_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfdiv/extended_real.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/linalg.hpp"

namespace qfdiv {

/// Default slack for inequality margins.
inline constexpr double kInequalitySlack = 1e-9;

/// One side-by-side comparison lhs <= rhs.
///
/// margin = rhs - lhs in extended arithmetic; a margin >= 0 means the
/// inequality holds. Equal infinities give margin 0, an infinite rhs against
/// a finite lhs gives +inf.
struct InequalityReport {
  int item = 0;
  std::string label;
  ExtendedReal lhs;
  ExtendedReal rhs;
  ExtendedReal margin;
  std::string pair_id;

  /// margin >= -slack * max(1, |lhs|, |rhs|).
  bool holds(double slack = kInequalitySlack) const;
};

InequalityReport make_report(int item, std::string label, ExtendedReal lhs,
                             ExtendedReal rhs, std::string pair_id = {});

struct InequalityParams {
  double alpha = 0.5;                   ///< item 8, in (0, 1)
  double beta = 2.0;                    ///< item 8, > 1
  std::vector<double> chi_alphas{2.5, 3.0};  ///< item 3, each > 2
};

inline constexpr int kFirstItem = 1;
inline constexpr int kLastPairItem = 9;

/// All logarithms are natural. V is sum |P - Q| in [0, 2] and H^2 the
/// squared Hellinger distance (1/2) sum (sqrt P - sqrt Q)^2 in [0, 1].
///
///  1  H^2 <= V/2 <= H sqrt(2 - H^2)                      (Le Cam)
///  2  D <= ln(1 + chi^2)
///  3  chi^2 <= (1 + (a-1) H_a)^{1/(a-1)} - 1,  a > 2
///  4  chi^2 >= V^2 (V <= 1),  V / (2 - V) (V > 1)
///  5  D^2/D' <= chi^2/2;  16 H^4 <= D D' <= chi^2 chi'^2 / 4;
///     8 H^2 <= D + D' <= (chi^2 + chi'^2) / 2                (Simic)
///  6  D <= (V + chi^2) / 2
///  7  D + D' >= V ln((2+V)/(2-V));  chi^2 + chi'^2 >= 8 V^2 / (4 - V^2)
///  8  H_a <= D_a <= D <= D_b <= H_b,  0 < a < 1 < b
///  9  V <= psi_f(D_f) for f = hellinger_sq, chi_sq
///
/// with D = D(rho||sigma), D' = D(sigma||rho) and likewise for chi^2.
/// Throws ParameterOutOfRange for an unknown item or parameters outside the
/// item's range.
std::vector<InequalityReport> check_item(int item, const DensityOperator& rho,
                                         const DensityOperator& sigma,
                                         const InequalityParams& params = {},
                                         const std::string& pair_id = {});

/// Items 1..9 in order.
std::vector<InequalityReport> check_all_items(
    const DensityOperator& rho, const DensityOperator& sigma,
    const InequalityParams& params = {}, const std::string& pair_id = {});

/// D_a <= D_b for consecutive entries of an increasing alpha grid (the
/// Petz-Renyi order is monotone in alpha). Reported under item 8.
std::vector<InequalityReport> renyi_monotonicity(
    const DensityOperator& rho, const DensityOperator& sigma,
    std::span<const double> alphas, const std::string& pair_id = {});

struct ConvergenceSample {
  int n = 0;
  ExtendedReal divergence;  ///< D_f(rho_n || sigma_n)
  double variation = 0;     ///< V(rho_n || sigma_n)
};

struct ConvergenceReport {
  std::string f_name;
  std::vector<ConvergenceSample> trace;
  double divergence_threshold = 0;
  double variation_threshold = 0;
  bool premise_reached = false;     ///< some D_f < divergence_threshold
  bool implication_holds = true;    ///< D_f < thr_D  =>  V < thr_V
  bool divergence_nonincreasing = true;  ///< within 1e-12
  bool variation_nonincreasing = true;   ///< within 1e-12
  bool envelope_holds = true;       ///< V <= sqrt(8 D_f) at every n
};

using StatePairSequence =
    std::function<std::pair<DensityOperator, DensityOperator>(int n)>;

/// Empirical check that D_f(rho_n||sigma_n) -> 0 forces V -> 0 along a
/// sequence, for n = 1..n_max.
///
/// f must be convex, non-negative, strictly convex and satisfy f(1) = 0;
/// these are spot-checked on a grid and a failure throws HypothesisViolation.
ConvergenceReport check_convergence_item10(const StatePairSequence& sequence,
                                           const DivergenceFunction& f,
                                           int n_max = 64,
                                           double divergence_threshold = 1e-6,
                                           double variation_threshold = 1e-3);

}  // namespace qfdiv

#endif  // QFDIV_INEQUALITIES_HPP
