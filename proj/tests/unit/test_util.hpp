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

#ifndef HSP_TESTS_TEST_UTIL_HPP_
#define HSP_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <map>
#include <vector>

namespace hsp::test {

// Upper-tail chi-square critical values at significance 0.001, frozen from
// the reference quantiles of the chi-square distribution.
inline double chi2_critical_001(int df) {
  switch (df) {
    case 3:
      return 16.2662;
    case 5:
      return 20.5150;
    case 15:
      return 37.6973;
    case 23:
      return 49.7282;
    case 63:
      return 103.4424;
    default:
      // Wilson-Hilferty approximation, adequate for the remaining dfs.
      {
        const double z = 3.0902;  // Phi^-1(0.999)
        const double d = static_cast<double>(df);
        const double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
        return d * t * t * t;
      }
  }
}

/// Pearson statistic for observed counts against expected counts.
inline double chi2_statistic(const std::vector<std::uint64_t>& observed,
                             const std::vector<double>& expected) {
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double diff = static_cast<double>(observed[i]) - expected[i];
    stat += diff * diff / expected[i];
  }
  return stat;
}

}  // namespace hsp::test

#endif  // HSP_TESTS_TEST_UTIL_HPP_
