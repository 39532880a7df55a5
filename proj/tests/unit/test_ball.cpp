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

#include "hsp/ball.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "test_util.hpp"

namespace hsp {
namespace {

// Independent Krawtchouk oracle: the defining double sum
// K_i(d) = sum_j (-1)^j C(d,j) C(n-d, i-j).
BigInt kraw_double_sum(int n, int i, int d) {
  BigInt acc = 0;
  for (int j = 0; j <= i; ++j) {
    const BigInt term = binomial(static_cast<unsigned>(d),
                                 static_cast<unsigned>(j)) *
                        binomial(static_cast<unsigned>(n - d),
                                 static_cast<unsigned>(i - j));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

BigInt partial_sum_oracle(int n, int k, int d) {
  BigInt acc = 0;
  for (int i = 0; i <= k; ++i) acc += kraw_double_sum(n, i, d);
  return acc;
}

// Independent amplitude oracle: sum (-1)^(x.u) over the ball |x| <= k,
// term by term over all 2^n inputs.
BigInt ball_amplitude_oracle(int n, int k, std::uint64_t u) {
  BigInt acc = 0;
  for (std::uint64_t x = 0; x < (1ull << n); ++x) {
    if (std::popcount(x) > k) continue;
    acc += (std::popcount(x & u) & 1) ? -1 : 1;
  }
  return acc;
}

TEST_CASE("binomial helpers") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(10, 11) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  for (unsigned n = 1; n <= 25; ++n) {
    const auto row = binomial_row(n);
    const auto prev = binomial_row(n - 1);
    for (unsigned i = 1; i < n; ++i)
      CHECK(row[i] == prev[i - 1] + prev[i]);  // Pascal
  }
}

TEST_CASE("ball size M_k") {
  CHECK(make_ball_spec(10, 8).m_k == 1013);
  CHECK(make_ball_spec(3, 3).m_k == 8);
  CHECK(make_ball_spec(8, 6).m_k == 247);
  CHECK(make_ball_spec(5, 0).m_k == 1);
  CHECK_THROWS_AS(make_ball_spec(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_ball_spec(5, -1), std::invalid_argument);
}

TEST_CASE("default threshold floor(n/2 + sqrt(n))") {
  CHECK(default_ball_threshold(3) == 3);
  CHECK(default_ball_threshold(4) == 4);
  CHECK(default_ball_threshold(5) == 4);
  CHECK(default_ball_threshold(8) == 6);
  CHECK(default_ball_threshold(10) == 8);
  CHECK(default_ball_threshold(16) == 12);
  CHECK(default_ball_threshold(100) == 60);
  CHECK(default_ball_threshold(998) == 530);
  CHECK(default_ball_threshold(999) == 531);
  CHECK(default_ball_threshold(1000) == 531);
  // lambda = 1 reproduces the default across a wide range
  for (int n = 3; n <= 1500; ++n)
    CHECK(ball_threshold_lambda(n, 1.0) == default_ball_threshold(n));
  CHECK(ball_threshold_lambda(16, 0.0) == 8);
  CHECK(ball_threshold_lambda(16, 100.0) == 16);  // clamped
}

TEST_CASE("partial Krawtchouk sums match the defining double sum") {
  for (int n = 1; n <= 24; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BallLaw law(n, k);
      for (int d = 0; d <= n; ++d)
        REQUIRE(law.partial_kraw_sum(d) == partial_sum_oracle(n, k, d));
    }
  }
  // spot checks at larger n
  for (const int n : {33, 40}) {
    for (const int k : {0, n / 2, default_ball_threshold(n), n}) {
      const BallLaw law(n, k);
      for (int d = 0; d <= n; ++d)
        REQUIRE(law.partial_kraw_sum(d) == partial_sum_oracle(n, k, d));
    }
  }
}

TEST_CASE("d = 0 recovers the ball size and the retrieval probability") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{
           {3, 3}, {10, 8}, {16, 12}, {41, 23}, {60, 37}}) {
    const BallLaw law(n, k);
    CHECK(law.partial_kraw_sum(0) == law.spec().m_k);
    CHECK(law.per_string_probability(0) ==
          Rational(law.spec().m_k, pow2(static_cast<unsigned>(n))));
    CHECK(law.retrieval_probability() == t_recovery_probability(n, k));
  }
  CHECK(t_recovery_probability(10, 8) == Rational(1013, 1024));
  CHECK(t_recovery_probability(3, 3) == 1);
  CHECK(t_recovery_probability(8, 6) == Rational(247, 256));
}

TEST_CASE("weight-class law equals the term-by-term amplitude oracle") {
  for (int n = 3; n <= 10; ++n) {
    const int k = default_ball_threshold(n);
    const BallLaw law(n, k);
    const BigInt denom = law.spec().m_k * pow2(static_cast<unsigned>(n));
    for (std::uint64_t u = 0; u < (1ull << n); ++u) {
      const BigInt amp = ball_amplitude_oracle(n, k, u);
      const int d = std::popcount(u);
      REQUIRE(law.per_string_probability(d) == Rational(amp * amp, denom));
    }
  }
  // an off-default threshold as well
  const BallLaw law(9, 3);
  const BigInt denom = law.spec().m_k * pow2(9);
  for (std::uint64_t u = 0; u < (1ull << 9); ++u) {
    const BigInt amp = ball_amplitude_oracle(9, 3, u);
    REQUIRE(law.per_string_probability(std::popcount(u)) ==
            Rational(amp * amp, denom));
  }
}

TEST_CASE("mass is exactly 1 for every threshold, n <= 24") {
  for (int n = 1; n <= 24; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BallLaw law(n, k);
      Rational mass = 0;
      for (int d = 0; d <= n; ++d) mass += law.class_probability(d);
      REQUIRE(mass == 1);
    }
  }
}

TEST_CASE("full ball pins the outcome to the center") {
  const BallLaw law(3, 3);
  CHECK(law.per_string_probability(0) == 1);
  for (int d = 1; d <= 3; ++d) CHECK(law.per_string_probability(d) == 0);
  Rng rng(5);
  const auto t = BitString::from_string("110");
  for (int i = 0; i < 50; ++i) CHECK(ball_sample(law, t, rng) == t);
}

TEST_CASE("distribution object centered at t") {
  const auto t = BitString::from_string("1110000000");
  const auto dist = ball_distribution(make_ball_spec(10, 8), t);
  CHECK(!dist.is_sparse());
  CHECK(dist.center() == t);
  CHECK(dist.probability_of(t) == Rational(1013, 1024));
  CHECK(dist.total_mass() == 1);

  // sparse expansion agrees pointwise on a small case
  const auto small = ball_distribution(make_ball_spec(6, 4), BitString::from_string("110100"));
  const auto sparse = small.to_sparse();
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const auto outcome = BitString::from_index(6, idx);
    CHECK(sparse.probability_of(outcome) == small.probability_of(outcome));
  }
}

TEST_CASE("sampled distances follow the exact class law (chi-square)") {
  const int n = 10;
  const int k = 8;
  const BallLaw law(n, k);
  Rng rng(2718);
  const std::uint64_t samples = 100000;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t i = 0; i < samples; ++i)
    ++counts[static_cast<std::size_t>(law.sample_distance(rng))];

  // pool classes with tiny expectation to keep Pearson valid
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;
  std::uint64_t pooled_obs = 0;
  double pooled_exp = 0;
  for (int d = 0; d <= n; ++d) {
    const double e =
        to_double(law.class_probability(d)) * static_cast<double>(samples);
    if (e < 10.0) {
      pooled_obs += counts[static_cast<std::size_t>(d)];
      pooled_exp += e;
    } else {
      observed.push_back(counts[static_cast<std::size_t>(d)]);
      expected.push_back(e);
    }
  }
  if (pooled_exp > 0) {
    observed.push_back(pooled_obs);
    expected.push_back(pooled_exp);
  }
  const double stat = test::chi2_statistic(observed, expected);
  CHECK(stat < test::chi2_critical_001(static_cast<int>(observed.size()) - 1));
}

TEST_CASE("hit rate of the center matches M_k / 2^n (4 sigma)") {
  const int n = 10;
  const int k = 8;
  const auto law = BallLaw::shared(n, k);
  const auto t = BitString::from_string("1011010010");
  Rng rng(31415);
  const std::uint64_t samples = 100000;
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i)
    if (ball_sample(*law, t, rng) == t) ++hits;
  const double p = 1013.0 / 1024.0;
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  CHECK(std::abs(static_cast<double>(hits) / static_cast<double>(samples) - p) <
        4 * sigma);
}

TEST_CASE("large-n retrieval probabilities (frozen endpoints)") {
  CHECK(to_double(t_recovery_probability(100, 60)) ==
        doctest::Approx(0.9823998999).epsilon(1e-9));
  CHECK(to_double(t_recovery_probability(998, 530)) ==
        doctest::Approx(0.9769636373).epsilon(1e-9));
  CHECK(to_double(t_recovery_probability(999, 531)) ==
        doctest::Approx(0.9785865713).epsilon(1e-9));
  CHECK(to_double(t_recovery_probability(1000, 531)) ==
        doctest::Approx(0.9768544013).epsilon(1e-9));
}

TEST_CASE("gaussian tail bound on the failure probability") {
  CHECK(recovery_failure_bound(1.0) ==
        doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-12));
  CHECK(recovery_failure_bound(0.0) == doctest::Approx(0.5));
}

}  // namespace
}  // namespace hsp
