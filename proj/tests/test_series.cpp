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

#include "doctest.h"

#include "summa/series.hpp"

using namespace summa;

namespace {

std::vector<Rational> values_of(const TermSequence& t) { return t.values; }

}  // namespace

TEST_CASE("factorial terms at x=1") {
  TermSequence t = terms(SeriesSpec::factorial(1), 6);
  std::vector<Rational> expect = {1, -1, 2, -6, 24, -120};
  CHECK(values_of(t) == expect);
}

TEST_CASE("odd double factorial terms at x=1") {
  TermSequence t = terms(SeriesSpec::odd_double_factorial(1), 5);
  std::vector<Rational> expect = {1, -1, 3, -15, 105};
  CHECK(values_of(t) == expect);
}

TEST_CASE("geometric terms with ratio 1") {
  TermSequence t = terms(SeriesSpec::geometric(1), 4);
  std::vector<Rational> expect = {1, 1, 1, 1};
  CHECK(values_of(t) == expect);
}

TEST_CASE("factorial at symbolic x keeps powers") {
  TermSequence t = terms(SeriesSpec::factorial(Rational(1, 2)), 4);
  std::vector<Rational> expect = {1, Rational(-1, 2), Rational(2, 4), Rational(-6, 8)};
  CHECK(values_of(t) == expect);
}

TEST_CASE("custom family length error") {
  SeriesSpec s = SeriesSpec::custom({1, -1, 2, -6}, 1);
  CHECK_THROWS_AS(terms(s, 5), std::length_error);
}

TEST_CASE("terms requires at least one term") {
  CHECK_THROWS_AS(terms(SeriesSpec::factorial(1), 0), std::invalid_argument);
}

TEST_CASE("hypergeometric with unit parameters reproduces factorials") {
  // coefficient k of the (p=1, q=1, m=0) family is k!
  TermSequence hyp = terms(SeriesSpec::hypergeometric(1, 1, 0, 1), 21);
  TermSequence fac = terms(SeriesSpec::factorial(1), 21);
  for (std::size_t k = 0; k < 21; ++k) CHECK(hyp.values[k] == fac.values[k]);
}

TEST_CASE("partial sums") {
  TermSequence t;
  t.values = {1, -1, 1, -1};
  std::vector<Rational> expect = {1, 0, 1, 0};
  CHECK(partial_sums(t) == expect);

  TermSequence empty;
  CHECK(partial_sums(empty).empty());

  TermSequence f;
  f.values = {1, -1, 2, -6, 24};
  std::vector<Rational> expect2 = {1, 0, 2, -4, 20};
  CHECK(partial_sums(f) == expect2);
}

TEST_CASE("partial sums of the alternating unit series oscillate between two values") {
  TermSequence t = terms(SeriesSpec::custom({1, -1, 1, -1, 1, -1, 1, -1}, 1), 8);
  auto sums = partial_sums(t);
  for (std::size_t i = 0; i < sums.size(); ++i)
    CHECK(sums[i] == (i % 2 == 0 ? Rational(1) : Rational(0)));
}

TEST_CASE("geometric value") {
  CHECK(geometric_value(2) == Rational(-1));
  CHECK(geometric_value(3) == Rational(-1, 2));
  CHECK(geometric_value(Rational(1, 2)) == Rational(2));
  CHECK_THROWS_AS(geometric_value(1), std::domain_error);
}

TEST_CASE("genus classification of the eight catalogue examples") {
  // I: bounded terms, constant signs
  CHECK(classify_genus(SeriesSpec::geometric(1)) == Genus::kI);
  std::vector<Rational> frac_terms, frac_alt;
  for (std::int64_t k = 1; k <= 40; ++k) {
    Rational v(k, k + 1);
    frac_terms.push_back(v);
    frac_alt.push_back(k % 2 == 1 ? v : -v);
  }
  CHECK(classify_genus(SeriesSpec::custom(frac_terms, 1)) == Genus::kI);

  // II: bounded terms, alternating signs
  std::vector<Rational> alt_unit;
  for (int k = 0; k < 40; ++k) alt_unit.push_back(k % 2 == 0 ? 1 : -1);
  CHECK(classify_genus(SeriesSpec::custom(alt_unit, 1)) == Genus::kII);
  CHECK(classify_genus(SeriesSpec::custom(frac_alt, 1)) == Genus::kII);

  // III: unbounded, constant signs
  std::vector<Rational> naturals;
  for (std::int64_t k = 1; k <= 40; ++k) naturals.push_back(k);
  CHECK(classify_genus(SeriesSpec::custom(naturals, 1)) == Genus::kIII);
  CHECK(classify_genus(SeriesSpec::geometric(2)) == Genus::kIII);

  // IV: unbounded, alternating signs
  std::vector<Rational> alt_naturals, alt_powers;
  Rational pw = 1;
  for (std::int64_t k = 1; k <= 40; ++k) {
    alt_naturals.push_back(k % 2 == 1 ? Rational(k) : Rational(-k));
    alt_powers.push_back(k % 2 == 1 ? pw : -pw);
    pw *= Rational(2);
  }
  CHECK(classify_genus(SeriesSpec::custom(alt_naturals, 1)) == Genus::kIV);
  CHECK(classify_genus(SeriesSpec::custom(alt_powers, 1)) == Genus::kIV);
}

TEST_CASE("genus classifier refuses what the probe cannot decide") {
  // magnitudes 1,2,1,2,...: neither eventually monotone direction
  std::vector<Rational> wobble;
  for (int k = 0; k < 32; ++k) wobble.push_back(k % 2 == 0 ? 1 : 2);
  CHECK_THROWS_AS(classify_genus(SeriesSpec::custom(wobble, 1)), UnclassifiedError);

  // mixed sign pattern: + + - + + - ...
  std::vector<Rational> mixed;
  for (int k = 0; k < 32; ++k) mixed.push_back(k % 3 == 2 ? -1 : 1);
  CHECK_THROWS_AS(classify_genus(SeriesSpec::custom(mixed, 1)), UnclassifiedError);

  // harmonic-style growth sits exactly on the probe's decision boundary
  std::vector<Rational> harmonic_sums;
  Rational h = 0;
  for (std::int64_t k = 1; k <= 40; ++k) {
    h += Rational(1, k);
    harmonic_sums.push_back(h);
  }
  CHECK_THROWS_AS(classify_genus(SeriesSpec::custom(harmonic_sums, 1)), UnclassifiedError);
}
