// Copyright 2026 The hspsim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hsp/matroid.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

namespace hsp {
namespace {

TwoBasesMatroid demo_matroid() {
  // B = {1,2}, B' = {1,3} over ground set {1,2,3}
  return {GroundSubset{3, {1, 2}}, GroundSubset{3, {1, 3}}};
}

TEST_CASE("indicator map") {
  CHECK(chi(GroundSubset{4, {1, 3}}).str() == "1010");
  CHECK(chi(GroundSubset{4, {}}).str() == "0000");
  CHECK(chi(GroundSubset{4, {1, 2, 3, 4}}).str() == "1111");
  CHECK_THROWS_AS(chi(GroundSubset{4, {5}}), std::invalid_argument);

  const auto back = chi_inverse(BitString::from_string("1010"));
  CHECK(back.n == 4);
  CHECK(back.members == std::vector<int>{1, 3});
}

TEST_CASE("construction validates the two-bases structure") {
  const auto m = demo_matroid();
  CHECK(m.n() == 3);
  CHECK(m.rank() == 2);
  // the pair of bases is unordered
  const std::set<std::vector<int>> bases{m.base_a().members,
                                         m.base_b().members};
  CHECK(bases == std::set<std::vector<int>>{{1, 2}, {1, 3}});

  // |B symdiff B'| = 4
  CHECK_THROWS_WITH_AS(
      (TwoBasesMatroid{GroundSubset{4, {1, 2}}, GroundSubset{4, {3, 4}}}),
      "TwoBasesMatroid: bases must have symmetric difference of size 2",
      std::invalid_argument);
  // unequal sizes
  CHECK_THROWS_WITH_AS(
      (TwoBasesMatroid{GroundSubset{4, {1, 2}}, GroundSubset{4, {1}}}),
      "TwoBasesMatroid: bases must have equal size", std::invalid_argument);
  // n = 2 mirrors the trivial exclusion
  CHECK_THROWS_AS((TwoBasesMatroid{GroundSubset{2, {1}}, GroundSubset{2, {2}}}),
                  std::invalid_argument);
}

TEST_CASE("rank oracle on the demo matroid") {
  MatroidRankOracle oracle(demo_matroid());
  CHECK(oracle.rank(GroundSubset{3, {2, 3}}) == 1);
  CHECK(oracle.rank(GroundSubset{3, {}}) == 0);
  CHECK(oracle.rank(GroundSubset{3, {1, 2, 3}}) == 2);
  CHECK(oracle.snapshot().classical == 3);
}

TEST_CASE("independence oracle on the demo matroid") {
  MatroidIndependenceOracle oracle(demo_matroid());
  CHECK(oracle.independent(GroundSubset{3, {1}}) == 1);
  CHECK(oracle.independent(GroundSubset{3, {2, 3}}) == 0);
  CHECK(oracle.independent(GroundSubset{3, {}}) == 1);
  CHECK(oracle.snapshot().classical == 3);
}

TEST_CASE("axiom validation") {
  CHECK(validate_matroid_axioms(demo_matroid()));
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));  // up to 10
    const auto inst = random_instance(n, rng);
    const auto m = TwoBasesMatroid::from_indicators(inst.s(), inst.s_prime());
    CHECK(validate_matroid_axioms(m));
  }
  // cap guard
  const auto big = random_instance(17, Seed{4});
  const auto m17 = TwoBasesMatroid::from_indicators(big.s(), big.s_prime());
  CHECK_THROWS_AS(validate_matroid_axioms(m17), std::domain_error);
}

TEST_CASE("oracle equivalence with the string oracles, exhaustive n <= 10") {
  Rng rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));
    const auto inst = random_instance(n, rng);
    const auto m = TwoBasesMatroid::from_indicators(inst.s(), inst.s_prime());
    MatroidRankOracle rank(m);
    MatroidIndependenceOracle indep(m);
    MaxIPOracle maxip(inst);
    SubsetOracle subset(inst);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      const auto indicator = BitString::from_index(n, mask);
      const auto subset_of_ground = chi_inverse(indicator);
      REQUIRE(rank.rank(subset_of_ground) == maxip.value(indicator));
      REQUIRE(indep.independent(subset_of_ground) == subset.value(indicator));
    }
  }
}

TEST_CASE("base identification delegates to the string algorithms") {
  const auto m = demo_matroid();

  SUBCASE("rank kind pairs with the extraction identification") {
    for (Seed seed = 0; seed < 30; ++seed) {
      Rng rng_m(seed);
      const auto result = identify_bases(m, MatroidOracleKind::kRank, rng_m);
      CHECK(result.ledger.superposed == 7);

      MaxIPOracle oracle(m.hidden_pair());
      Rng rng_s(seed);
      const auto direct = maxip_identify(oracle, 7, SampleMode::kAnalytic, rng_s);
      CHECK(result.ledger == oracle.snapshot());
      CHECK(result.bases.has_value() == direct.has_value());
      if (result.bases && direct) {
        CHECK(chi(result.bases->first) == direct->s());
        CHECK(chi(result.bases->second) == direct->s_prime());
        CHECK(result.success);
      }
    }
  }

  SUBCASE("independence kind pairs with the sub-set identification") {
    for (Seed seed = 0; seed < 30; ++seed) {
      Rng rng_m(seed);
      const auto result =
          identify_bases(m, MatroidOracleKind::kIndependence, rng_m);

      SubsetOracle oracle(m.hidden_pair());
      Rng rng_s(seed);
      const auto direct = subset_identify(oracle, rng_s);
      CHECK(result.ledger == oracle.snapshot());
      CHECK(result.bases.has_value() == direct.has_value());
      if (result.bases && direct) {
        CHECK(chi(result.bases->first) == direct->s());
        CHECK(chi(result.bases->second) == direct->s_prime());
      }
    }
  }
}

}  // namespace
}  // namespace hsp
