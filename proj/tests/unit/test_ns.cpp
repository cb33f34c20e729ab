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

#include "qfdiv/error.hpp"
#include "qfdiv/ns.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qfdiv;
using namespace qfdiv::fixtures;

namespace {

NSPair ns_of(const DensityOperator& rho, const DensityOperator& sigma) {
  return build_ns(spectral_decompose(rho), spectral_decompose(sigma));
}

}  // namespace

TEST_CASE("build_ns examples") {
  SUBCASE("identical maximally mixed") {
    const NSPair ns = ns_of(maximally_mixed(2), maximally_mixed(2));
    CHECK(ns.P(0, 0) == doctest::Approx(0.5));
    CHECK(ns.P(1, 1) == doctest::Approx(0.5));
    CHECK(ns.P(0, 1) == 0.0);
    CHECK(ns.Q(1, 0) == 0.0);
  }
  SUBCASE("|0> against |+>") {
    const NSPair ns = ns_of(ket0(), ket_plus());
    CHECK(ns.P(0, 0) == doctest::Approx(0.5));
    CHECK(ns.P(0, 1) == doctest::Approx(0.5));
    CHECK(ns.P(1, 0) == 0.0);
    CHECK(ns.P(1, 1) == 0.0);
    CHECK(ns.Q(0, 0) == doctest::Approx(0.5));
    CHECK(ns.Q(1, 0) == doctest::Approx(0.5));
    CHECK(ns.Q(0, 1) == 0.0);
    CHECK(ns.Q(1, 1) == 0.0);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(ns_of(ket0(), maximally_mixed(3)), Error);
  }
}

TEST_CASE("marginals and normalization on random pairs") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(s % 5);
    const NSPair ns = ns_of(random_rank(s, d, 1 + s % d, 0),
                            random_rank(s, d, 1 + (s / 3) % d, 1));
    CHECK(std::abs(ns.P.sum() - 1.0) <= 1e-9);
    CHECK(std::abs(ns.Q.sum() - 1.0) <= 1e-9);
    CHECK((ns.P.rowwise().sum() - ns.r).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((ns.Q.colwise().sum().transpose() - ns.s).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((ns.overlaps.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-9);
    CHECK(ns.P.minCoeff() >= 0.0);
    CHECK(ns.Q.minCoeff() >= 0.0);
  }
}

TEST_CASE("ns_equal matches matrix equality") {
  CHECK(ns_equal(ns_of(random_full(3, 4), random_full(3, 4))));
  CHECK_FALSE(ns_equal(ns_of(ket0(), ket_plus())));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const DensityOperator a = random_rank(s, 4, 1 + s % 4, 0);
    const DensityOperator b = random_rank(s, 4, 1 + s % 4, 1);
    CHECK(ns_equal(ns_of(a, a)));
    CHECK_FALSE(ns_equal(ns_of(a, b)));
  }
}

TEST_CASE("absolute continuity matches range containment") {
  CHECK(ns_absolutely_continuous(ns_of(random_full(1, 3, 0), random_full(1, 3, 1))));
  CHECK_FALSE(ns_absolutely_continuous(ns_of(ket_plus(), ket0())));
  for (std::uint64_t s = 0; s < 60; ++s) {
    const DensityOperator a = random_rank(s, 5, 1 + s % 3, 0);
    const DensityOperator b = random_rank(s, 5, 1 + (s / 3) % 5, 1);
    const NSPair ns = ns_of(a, b);
    CHECK(ns_absolutely_continuous(ns) ==
          oracle::range_contained(a.matrix(), b.matrix()));
    // Support lemma: a zero s_j with containment carries no P mass.
    if (ns_absolutely_continuous(ns)) {
      for (Eigen::Index j = 0; j < ns.dim; ++j) {
        if (ns.s(j) == 0.0) CHECK(ns.P.col(j).maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("boundary masses") {
  const NSPair ns = ns_of(ket0(), maximally_mixed(2));
  CHECK(ns_mass_q_where_p_zero(ns) == doctest::Approx(0.5));
  CHECK(ns_mass_p_where_q_zero(ns) == 0.0);
  const NSPair orth = ns_of(ket0(), ket1());
  CHECK(ns_mass_p_where_q_zero(orth) == doctest::Approx(1.0));
  CHECK(ns_mass_q_where_p_zero(orth) == doctest::Approx(1.0));
}
