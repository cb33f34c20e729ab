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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "qfdiv/error.hpp"
#include "qfdiv/generators.hpp"
#include "qfdiv/inequalities.hpp"
#include "qfdiv/qdiv.hpp"
#include "support/fixtures.hpp"

using namespace qfdiv;
using namespace qfdiv::fixtures;
using ER = ExtendedReal;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qfdiv::Error");
  return ErrorCode::InvalidConfig;
}

const InequalityReport& find(const std::vector<InequalityReport>& rs,
                             const std::string& prefix) {
  for (const auto& r : rs) {
    if (r.label.rfind(prefix, 0) == 0) return r;
  }
  FAIL("no report " << prefix);
  return rs.front();
}

}  // namespace

TEST_CASE("margin conventions") {
  const auto fin = [](double v) { return ER::finite(v); };
  CHECK(make_report(1, "x", fin(1), fin(3)).margin == fin(2));
  CHECK(make_report(1, "x", fin(1), ER::plus_infinity()).margin == ER::plus_infinity());
  CHECK(make_report(1, "x", ER::plus_infinity(), ER::plus_infinity()).margin == ER::zero());
  CHECK(make_report(1, "x", ER::plus_infinity(), fin(5)).margin == ER::minus_infinity());
  CHECK(make_report(1, "x", ER::minus_infinity(), fin(5)).margin == ER::plus_infinity());
  CHECK(make_report(1, "x", fin(2), fin(2 - 1e-10)).holds());
  CHECK_FALSE(make_report(1, "x", fin(2), fin(2 - 1e-8)).holds());
  // slack scales with the magnitudes involved
  CHECK(make_report(1, "x", fin(1e6), fin(1e6 - 1e-4)).holds());
  CHECK_FALSE(make_report(1, "x", ER::plus_infinity(), fin(1)).holds());
}

TEST_CASE("identical states: every item holds") {
  const auto rho = random_full(1, 3);
  const auto rs = check_all_items(rho, rho);
  CHECK(rs.size() == 20);
  for (const auto& r : rs) {
    CHECK_MESSAGE(r.holds(), r.label);
    CHECK_MESSAGE(r.margin.is_finite(), r.label);
    CHECK_MESSAGE(std::abs(r.margin.value()) <= 1e-12, r.label);
  }
}

TEST_CASE("orthogonal pure states resolve through extended order") {
  const auto rs = check_item(2, ket0(), ket1());
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].lhs == ER::plus_infinity());
  CHECK(rs[0].rhs == ER::plus_infinity());
  CHECK(rs[0].holds());
  for (const auto& r : check_all_items(ket0(), ket1())) CHECK_MESSAGE(r.holds(), r.label);
}

TEST_CASE("Le Cam bounds use half the variation") {
  // P = (0.9, 0.1, 0), Q = (0.9, 0, 0.1): H^2 = V/2 = 0.1 while V^2 = 0.04.
  const auto rho = diag_state({0.9, 0.1, 0.0});
  const auto sigma = diag_state({0.9, 0.0, 0.1});
  const auto rs = check_item(1, rho, sigma);
  const auto& lower = find(rs, "1a");
  CHECK(lower.lhs.value() == doctest::Approx(0.1));
  CHECK(lower.rhs.value() == doctest::Approx(0.1));
  CHECK(lower.holds());
  CHECK(find(rs, "1b").holds());
  CHECK(total_variation_q(rho, sigma) * total_variation_q(rho, sigma) <
        hellinger_sq_q(rho, sigma));
}

TEST_CASE("item 4 piecewise bound") {
  // V = 1 exactly: both branches give 1.
  const auto rs = check_item(4, diag_state({1.0, 0.0}), diag_state({0.5, 0.5}));
  CHECK(rs[0].lhs.value() == doctest::Approx(1.0));
  CHECK(rs[0].holds());
  // V > 1 uses V / (2 - V)
  const auto big = check_item(4, diag_state({0.9, 0.1}), diag_state({0.1, 0.9}));
  CHECK(big[0].lhs.value() == doctest::Approx(1.6 / 0.4));
  CHECK(big[0].holds());
}

TEST_CASE("parameter ranges") {
  const auto rho = random_full(2, 2, 0);
  const auto sigma = random_full(2, 2, 1);
  InequalityParams p;
  p.chi_alphas = {2.0};
  CHECK(code_of([&] { check_item(3, rho, sigma, p); }) == ErrorCode::ParameterOutOfRange);
  p = {};
  p.alpha = 1.0;
  CHECK(code_of([&] { check_item(8, rho, sigma, p); }) == ErrorCode::ParameterOutOfRange);
  p = {};
  p.beta = 1.0;
  CHECK(code_of([&] { check_item(8, rho, sigma, p); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { check_item(0, rho, sigma); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { check_item(10, rho, sigma); }) == ErrorCode::ParameterOutOfRange);
  const std::vector<double> bad{2.0, 1.5};
  CHECK(code_of([&] { renyi_monotonicity(rho, sigma, bad); }) ==
        ErrorCode::ParameterOutOfRange);
}

TEST_CASE("fuzz: items 1-9 and alpha monotonicity") {
  const std::vector<double> grid{0.25, 0.5, 0.75, 1.5, 2.0, 3.0};
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(s % 5);
    DensityOperator a = random_rank(s, d, 1 + s % d, 0);
    DensityOperator b = random_rank(s, d, 1 + (s / 5) % d, 1);
    if (s % 7 == 0) b = mix(a, b, 1e-6);
    for (const auto& r : check_all_items(a, b)) {
      CHECK_MESSAGE(r.holds(), r.label, " seed ", s, " margin ", r.margin.to_string());
    }
    for (const auto& r : renyi_monotonicity(a, b, grid)) {
      CHECK_MESSAGE(r.holds(), r.label, " seed ", s);
    }
  }
}

TEST_CASE("convergence check: hypotheses") {
  const auto sigma = random_full(3, 3, 0);
  const StatePairSequence constant = [&](int) {
    return std::pair<DensityOperator, DensityOperator>(sigma, sigma);
  };
  CHECK(code_of([&] { check_convergence_item10(constant, builtin("kl")); }) ==
        ErrorCode::HypothesisViolation);
  CHECK(code_of([&] { check_convergence_item10(constant, builtin("total_variation")); }) ==
        ErrorCode::HypothesisViolation);
  CHECK(code_of([&] { check_convergence_item10(constant, builtin("renyi_alpha", 0.5)); }) ==
        ErrorCode::HypothesisViolation);
  CHECK(code_of([&] { check_convergence_item10(constant, builtin("renyi_alpha", 2.0)); }) ==
        ErrorCode::HypothesisViolation);

  const auto r = check_convergence_item10(constant, builtin("hellinger_sq"), 8);
  CHECK(r.trace.size() == 8);
  for (const auto& x : r.trace) {
    CHECK(x.divergence == ER::zero());
    CHECK(x.variation == 0.0);
  }
  CHECK(r.premise_reached);
  CHECK(r.implication_holds);
}

TEST_CASE("convergence check: mixing sequence") {
  const PerturbationSequence seq = perturbation_sequence(
      {5, 3, 3, StateKind::PerturbationSequence, 0}, SequenceShape::MixingLinear);
  const StatePairSequence pairs = [&](int n) {
    return std::pair<DensityOperator, DensityOperator>(seq.term(n), seq.sigma);
  };
  const auto h = check_convergence_item10(pairs, builtin("hellinger_sq"), 64);
  CHECK(h.divergence_nonincreasing);
  CHECK(h.variation_nonincreasing);
  CHECK(h.implication_holds);
  CHECK(h.envelope_holds);
  CHECK(h.trace.back().divergence < h.trace.front().divergence);
  CHECK(h.trace.back().variation < h.trace.front().variation);

  const auto c = check_convergence_item10(pairs, builtin("chi_sq"), 64);
  CHECK(c.envelope_holds);
  CHECK(c.divergence_nonincreasing);

  const PerturbationSequence fast = perturbation_sequence(
      {5, 3, 3, StateKind::PerturbationSequence, 0}, SequenceShape::MixingQuadratic);
  const StatePairSequence fast_pairs = [&](int n) {
    return std::pair<DensityOperator, DensityOperator>(fast.term(n), fast.sigma);
  };
  const auto q = check_convergence_item10(fast_pairs, builtin("hellinger_sq"), 64);
  CHECK(q.premise_reached);
  CHECK(q.envelope_holds);
  const auto qc = check_convergence_item10(fast_pairs, builtin("chi_sq"), 64);
  CHECK(qc.premise_reached);
  CHECK(qc.implication_holds);
}

// chi^2 >= V^2, so chi^2 < 1e-6 forces V < 1e-3. For H^2 only V <= 2 sqrt(2) H
// is available, so the fixed thresholds can miss by up to a factor 2.83.
TEST_CASE("convergence check: threshold implication across seeds") {
  int hellinger_misses = 0;
  int chi_premises = 0;
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const PerturbationSequence seq = perturbation_sequence(
        {s, 3, 3, StateKind::PerturbationSequence, 1}, SequenceShape::MixingQuadratic);
    const StatePairSequence pairs = [&](int n) {
      return std::pair<DensityOperator, DensityOperator>(seq.term(n), seq.sigma);
    };
    const auto c = check_convergence_item10(pairs, builtin("chi_sq"), 64);
    CHECK(c.implication_holds);
    chi_premises += c.premise_reached ? 1 : 0;
    const auto h = check_convergence_item10(pairs, builtin("hellinger_sq"), 64);
    CHECK(h.envelope_holds);
    for (const auto& x : h.trace) {
      if (x.divergence < ER::finite(1e-6)) CHECK(x.variation < 2.0 * std::sqrt(2e-6));
    }
    hellinger_misses += h.implication_holds ? 0 : 1;
  }
  CHECK(chi_premises > 0);
  MESSAGE("chi_sq premise reached on ", chi_premises, "/40 seeds");
  MESSAGE("hellinger_sq misses the 1e-6 => 1e-3 implication on ", hellinger_misses, "/40 seeds");
}
