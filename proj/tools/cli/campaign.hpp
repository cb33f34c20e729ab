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

#ifndef QFDIV_CLI_CAMPAIGN_HPP
#define QFDIV_CLI_CAMPAIGN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfdiv/extended_real.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/inequalities.hpp"
#include "qfdiv/linalg.hpp"

namespace qfdiv::cli {

/// Pair families drawn by the campaigns.
///
///   full-rank       two independent Ginibre states of rank d
///   fixed-rank      two independent states of rank ceil(d/2)
///   pure            two independent pure states
///   commuting       two states diagonal in one Haar basis
///   near-identical  rho full rank, sigma = (1 - 1e-6) rho + 1e-6 tau
///   mixed-rank      independent ranks drawn uniformly from 1..d
std::span<const std::string_view> pair_kinds();
bool is_pair_kind(std::string_view kind);

/// Everything needed to regenerate one pair: "seed:dim:kind:index".
struct PairKey {
  std::uint64_t seed = 0;
  Eigen::Index dim = 2;
  std::string kind = "full-rank";
  std::uint64_t index = 0;

  std::string to_string() const;
  /// Throws std::invalid_argument.
  static PairKey parse(std::string_view text);
};

struct StatePair {
  DensityOperator rho;
  DensityOperator sigma;
};

/// Deterministic in the key alone. Throws std::invalid_argument for an
/// unknown kind and qfdiv::Error for a bad dim.
StatePair make_pair(const PairKey& key);

/// --jobs if given, else the hardware concurrency; capped by the
/// QFDIV_MAX_WORKERS environment variable; at least 1.
unsigned resolve_workers(std::optional<unsigned> requested);

/// Runs body(i) for i in [0, n) on `workers` threads. The body must not
/// throw.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& body);

/// A builtin name with its alpha, written "name" or "name:alpha".
struct FunctionSpec {
  std::string name;
  double alpha = 0.0;

  std::string label() const;
  DivergenceFunction make() const;
  /// Throws std::invalid_argument.
  static FunctionSpec parse(std::string_view text);
};

/// kl, chi_sq, total_variation, hellinger_sq, hellinger_alpha at
/// 0.3, 0.5, 2, 3 and renyi_alpha at 0.5, 2.
std::vector<FunctionSpec> default_theorem_functions();

/// Both routes agree when they classify the value identically (finite, +inf,
/// -inf) and finite values differ by at most tol * max(1, |ns|).
bool routes_agree(const ExtendedReal& ns, const ExtendedReal& modular,
                  double tol);

struct RouteComparison {
  std::string function;
  ExtendedReal ns;
  ExtendedReal modular;
  bool agree = false;
};

struct TheoremCaseResult {
  PairKey key;
  std::vector<RouteComparison> rows;
  std::string error;  ///< non-empty when the case threw
  bool passed = false;
};

struct TheoremCampaign {
  std::uint64_t seed = 1;
  std::vector<Eigen::Index> dims{2, 3, 4};
  std::vector<std::string> kinds{"full-rank", "fixed-rank", "pure", "commuting"};
  int pairs_per_cell = 100;
  std::vector<FunctionSpec> functions = default_theorem_functions();
  double tolerance = 1e-8;
  unsigned workers = 1;
};

/// Cases ordered by dim, then kind, then pair index.
std::vector<PairKey> theorem_keys(const TheoremCampaign& c);
TheoremCaseResult run_theorem_case(const PairKey& key,
                                   const std::vector<FunctionSpec>& functions,
                                   double tolerance);
std::vector<TheoremCaseResult> run_theorem_campaign(const TheoremCampaign& c);

struct InequalityCaseResult {
  PairKey key;
  std::vector<InequalityReport> reports;
  std::string error;
  bool passed = false;
};

struct InequalityCampaign {
  std::uint64_t seed = 1;
  std::vector<Eigen::Index> dims{2, 3, 4, 5, 6};
  std::vector<std::string> kinds{"full-rank", "fixed-rank", "pure",
                                 "commuting", "near-identical", "mixed-rank"};
  int pairs = 1000;
  std::vector<int> items{1, 2, 3, 4, 5, 6, 7, 8, 9};
  InequalityParams params;
  bool renyi_monotonicity = true;
  double slack = kInequalitySlack;
  unsigned workers = 1;
};

/// Pair k uses dims[k % |dims|] and kinds[(k / |dims|) % |kinds|].
std::vector<PairKey> inequality_keys(const InequalityCampaign& c);
InequalityCaseResult run_inequality_case(const PairKey& key,
                                         const InequalityCampaign& c);
std::vector<InequalityCaseResult> run_inequality_campaign(
    const InequalityCampaign& c);

/// Alpha grid for the Renyi monotonicity sub-check.
std::span<const double> renyi_grid();

struct ConvergenceCase {
  std::string sequence;  ///< mixing-linear, mixing-quadratic, rotation
  ConvergenceReport report;
  bool passed = false;
};

/// Three perturbation sequences of the given dim, each checked for
/// hellinger_sq and chi_sq. A case passes when the implication and the
/// sqrt(8 D) envelope hold; premise_reached records whether the implication
/// was exercised.
std::vector<ConvergenceCase> run_convergence_campaign(std::uint64_t seed,
                                                      Eigen::Index dim,
                                                      int n_max);

}  // namespace qfdiv::cli

#endif  // QFDIV_CLI_CAMPAIGN_HPP
