// Copyright 2026 The Summa Authors
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

#ifndef SUMMA_SERIES_HPP
#define SUMMA_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "summa/rational.hpp"

namespace summa {

enum class SeriesFamily {
  kFactorial,           // 1 - 1x + 2x^2 - 6x^3 + 24x^4 - ...
  kHypergeometric,      // x^m - p x^(m+q) + p(p+q) x^(m+2q) - ...
  kOddDoubleFactorial,  // x - 1x^3 + 1*3 x^5 - 1*3*5 x^7 + ...
  kGeometric,           // 1 + r + r^2 + ...   (all terms r^k)
  kCustom,              // explicit signed coefficients of x^k
};

enum class SignPattern { kAlternating, kConstant };

// Declarative description of a series family plus its evaluation point.
// Series are finite truncations regenerated on demand; nothing is lazy.
struct SeriesSpec {
  SeriesFamily family = SeriesFamily::kFactorial;
  Rational point_x = 1;
  SignPattern sign_pattern = SignPattern::kAlternating;

  // Hypergeometric parameters (z = x^m - p x^(m+q) + ...)
  Rational p = 1;
  Rational q = 1;
  Rational m = 0;

  // Geometric ratio
  Rational ratio = 1;

  // Custom coefficients (term k = coefficients[k] * x^k)
  std::vector<Rational> coefficients;

  static SeriesSpec factorial(Rational x = 1);
  static SeriesSpec hypergeometric(Rational p, Rational q, Rational m = 0, Rational x = 1);
  static SeriesSpec odd_double_factorial(Rational x = 1);
  static SeriesSpec geometric(Rational ratio);
  static SeriesSpec custom(std::vector<Rational> coefficients, Rational x = 1);
};

// Finite, explicitly truncated run of signed terms in series order.
struct TermSequence {
  std::vector<Rational> values;
  std::size_t length() const { return values.size(); }
};

enum class Genus { kI, kII, kIII, kIV };

struct UnclassifiedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// First k signed terms of the family at point_x, exact.
TermSequence terms(const SeriesSpec& spec, std::size_t k);

// Running exact prefix sums, same length as the input.
std::vector<Rational> partial_sums(const TermSequence& t);

// 1/(1 - ratio): the value of the generating expression of 1 + a + a^2 + ...
// ratio == 1 is a pole and throws.
Rational geometric_value(const Rational& ratio);

// Term-magnitude monotone growth test over a probe window crossed with the
// sign pattern. Bounded magnitudes -> I/II, unbounded -> III/IV; anything the
// probe cannot decide raises UnclassifiedError rather than guessing.
Genus classify_genus(const SeriesSpec& spec, std::size_t probe_depth = 32);

const char* genus_name(Genus g);

}  // namespace summa

#endif  // SUMMA_SERIES_HPP
