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

#ifndef HSP_GROVER_HPP_
#define HSP_GROVER_HPP_

#include <cstdint>
#include <vector>

#include "hsp/bitstring.hpp"

namespace hsp {

// Two-dimensional rotation model of Grover search: with M marked items in a
// space of N, each iteration rotates the state by 2*theta where
// theta = arcsin(sqrt(M/N)); after r iterations a measurement hits a marked
// item with probability sin^2((2r+1)*theta). The schedule used everywhere is
// r = floor((pi/4) * sqrt(N/M)); sub-1 success is absorbed by retry rounds.

struct GroverPlan {
  std::uint64_t search_space = 0;   // N
  std::uint64_t marked = 0;         // M
  unsigned iterations = 0;          // r
  double success_probability = 0;   // sin^2((2r+1) theta)
};

/// Requires 1 <= marked <= search_space.
GroverPlan grover_plan(std::uint64_t search_space, std::uint64_t marked);

struct GroverPolicy {
  /// Total measurement rounds allowed across both marked items.
  unsigned max_rounds = 8;
};

struct GroverResult {
  std::vector<BitString> found;            // verified marked elements
  std::uint64_t grover_queries = 0;        // one per iteration
  std::uint64_t verification_queries = 0;  // one classical check per round
  unsigned rounds = 0;
  bool complete = false;  // both marked elements found and verified
};

}  // namespace hsp

#endif  // HSP_GROVER_HPP_
