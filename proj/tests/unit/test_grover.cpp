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

#include "hsp/grover.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "hsp/algorithms.hpp"
#include "hsp/oracles.hpp"

namespace hsp {
namespace {

TEST_CASE("rotation plans at closed-form points") {
  const auto half = grover_plan(4, 2);  // theta = pi/4
  CHECK(half.iterations == 1);
  CHECK(half.success_probability == doctest::Approx(0.5).epsilon(1e-12));

  const auto single = grover_plan(1, 1);
  CHECK(single.iterations == 0);
  CHECK(single.success_probability == doctest::Approx(1.0).epsilon(1e-12));

  const auto needle = grover_plan(100, 1);
  CHECK(needle.iterations == 7);
  // sin^2(15 * arcsin(1/10))
  CHECK(needle.success_probability ==
        doctest::Approx(0.9953444004).epsilon(1e-9));
}

TEST_CASE("plan invariants") {
  // N == M: zero iterations, certain success
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const auto plan = grover_plan(n, n);
    CHECK(plan.iterations == 0);
    CHECK(plan.success_probability == doctest::Approx(1.0).epsilon(1e-12));
  }
  // r == 0: success equals M/N
  const auto plan = grover_plan(3, 2);
  CHECK(plan.iterations == 0);
  CHECK(plan.success_probability == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(grover_plan(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(grover_plan(4, 5), std::invalid_argument);
}

TEST_CASE("search over the shrink set finds exactly the pair") {
  const HiddenPairInstance inst(BitString::from_string("110"),
                                BitString::from_string("101"));
  const auto candidates = shrink_candidates(inst.join());
  REQUIRE(candidates.size() == 3);
  CHECK(std::set<BitString>(candidates.begin(), candidates.end()) ==
        std::set<BitString>{BitString::from_string("011"),
                            BitString::from_string("101"),
                            BitString::from_string("110")});

  int complete = 0;
  const int runs = 400;
  for (int seed = 0; seed < runs; ++seed) {
    SubsetOracle oracle(inst);
    Rng rng(static_cast<Seed>(seed));
    const auto result = grover_find_marked(oracle, candidates, rng);
    if (!result.complete) continue;
    ++complete;
    CHECK(std::set<BitString>(result.found.begin(), result.found.end()) ==
          std::set<BitString>{inst.s(), inst.s_prime()});
    // accounting: grover iterations + verifications all hit the ledger
    const auto ledger = oracle.snapshot();
    CHECK(ledger.grover == result.grover_queries);
    CHECK(ledger.classical == result.verification_queries);
  }
  // per-round success here is 2/3 then 1/2; 8 rounds leave only a small
  // failure mass, but it is not zero
  CHECK(complete > runs * 9 / 10);
}

TEST_CASE("no marked candidates exhausts the budget") {
  const HiddenPairInstance inst(BitString::from_string("110"),
                                BitString::from_string("101"));
  SubsetOracle oracle(inst);
  Rng rng(9);
  // 011 is inside neither string: nothing to find
  const std::vector<BitString> candidates{BitString::from_string("011")};
  const GroverPolicy policy{6};
  const auto result = grover_find_marked(oracle, candidates, rng, policy);
  CHECK(!result.complete);
  CHECK(result.found.empty());
  CHECK(result.rounds == 6);
  CHECK(result.verification_queries == 6);
}

TEST_CASE("iteration budget scales as sqrt(n)") {
  Rng rng(17);
  for (const int n : {16, 64, 256, 1000}) {
    const auto inst = random_instance(n, rng);
    SubsetOracle oracle(inst);
    const auto candidates = shrink_candidates(inst.join());
    const GroverPolicy policy;
    const auto result = grover_find_marked(oracle, candidates, rng, policy);
    const double per_round =
        std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(n))) + 1;
    CHECK(result.grover_queries + result.verification_queries <=
          policy.max_rounds * static_cast<std::uint64_t>(per_round + 1));
  }
}

}  // namespace
}  // namespace hsp
