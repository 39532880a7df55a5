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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsp {

GroverPlan grover_plan(std::uint64_t search_space, std::uint64_t marked) {
  if (marked == 0)
    throw std::invalid_argument("grover_plan: marked count must be positive");
  if (marked > search_space)
    throw std::invalid_argument("grover_plan: marked cannot exceed the space");
  GroverPlan plan;
  plan.search_space = search_space;
  plan.marked = marked;
  const double ratio =
      static_cast<double>(marked) / static_cast<double>(search_space);
  const double theta = std::asin(std::sqrt(ratio));
  plan.iterations = static_cast<unsigned>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(1.0 / ratio)));
  const double amp = std::sin((2.0 * plan.iterations + 1.0) * theta);
  plan.success_probability = amp * amp;
  return plan;
}

}  // namespace hsp
