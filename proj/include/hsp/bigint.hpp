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

#ifndef HSP_BIGINT_HPP_
#define HSP_BIGINT_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsp {

// Exact arithmetic surface. All probabilities handled by the engines are
// rationals whose denominators are products of 2^n, M_k and 4^w; they are
// kept in lowest terms by cpp_rational. Floating point only appears in
// Monte-Carlo summaries and Gaussian-tail helpers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

/// C(n, k) as an exact integer (0 when k > n).
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is a binomial coefficient
  }
  return r;
}

/// Row C(n, 0..n) of Pascal's triangle.
inline std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    row[i] = row[i - 1] * (n - i + 1);
    row[i] /= i;
  }
  return row;
}

inline unsigned floor_log2(const BigInt& v) {
  if (v <= 0) throw std::domain_error("floor_log2: argument must be positive");
  return boost::multiprecision::msb(v);
}

inline unsigned ceil_log2(const BigInt& v) {
  const unsigned m = floor_log2(v);
  return (v == pow2(m)) ? m : m + 1;
}

/// Smallest m >= 1 with base^m >= v (ceil of log_base(v) for v > 1).
inline unsigned ceil_log_base(unsigned base, const BigInt& v) {
  if (base < 2) throw std::domain_error("ceil_log_base: base must be >= 2");
  if (v <= 1) return 0;
  BigInt p = 1;
  unsigned m = 0;
  while (p < v) {
    p *= base;
    ++m;
  }
  return m;
}

/// Canonical "p/q" rendering in lowest terms ("1/4", "3969/4096", "1/1").
inline std::string fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace hsp

#endif  // HSP_BIGINT_HPP_
