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

#include "summa/differences.hpp"
#include "summa/quadrature.hpp"

using namespace summa;

namespace {

struct Rng {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Rational binom(std::size_t n, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i)
    r = r * Rational(static_cast<std::int64_t>(n - i)) / Rational(static_cast<std::int64_t>(i + 1));
  return r;
}

}  // namespace

TEST_CASE("difference table worked rows") {
  DifferenceTable t = difference_table({1, 2, 3, 4, 5}, 2);
  CHECK(t.rows[1] == std::vector<Rational>{1, 1, 1, 1});
  CHECK(t.rows[2] == std::vector<Rational>{0, 0, 0});

  DifferenceTable sq = difference_table({1, 4, 9, 16, 25}, 2);
  CHECK(sq.rows[1] == std::vector<Rational>{3, 5, 7, 9});
  CHECK(sq.rows[2] == std::vector<Rational>{2, 2, 2});

  DifferenceTable c = difference_table({7, 7, 7}, 1);
  CHECK(c.rows[1] == std::vector<Rational>{0, 0});

  CHECK_THROWS_AS(difference_table({1, 2}, 2), std::out_of_range);
}

TEST_CASE("difference table rows reconstruct and satisfy the binomial identity") {
  Rng rng;
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<Rational> vals;
    for (int i = 0; i < 9; ++i) vals.emplace_back(rng.range(-99, 99), rng.range(1, 30));
    DifferenceTable t = difference_table(vals, 8);
    // reconstruction: rows[k+1][i] = rows[k][i+1] - rows[k][i]
    for (std::size_t k = 0; k + 1 < t.rows.size(); ++k)
      for (std::size_t i = 0; i + 1 < t.rows[k].size(); ++i)
        CHECK(t.rows[k + 1][i] == t.rows[k][i + 1] - t.rows[k][i]);
    // rows[k][0] = sum_i (-1)^(k-i) C(k,i) values[i]
    for (std::size_t k = 0; k <= 8; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        Rational sign = ((k - i) % 2 == 0) ? Rational(1) : Rational(-1);
        acc += sign * binom(k, i) * vals[i];
      }
      CHECK(t.top(k) == acc);
    }
  }
}

TEST_CASE("euler transform closes the catalogue sums exactly") {
  CHECK(euler_transform_sum({1, 1, 1, 1, 1, 1}).value_exact == Rational(1, 2));
  CHECK(euler_transform_sum({1, 2, 3, 4, 5, 6}).value_exact == Rational(1, 4));
  CHECK(euler_transform_sum({1, 4, 9, 16, 25, 36}).value_exact == Rational(0));
  CHECK(euler_transform_sum({1, 3, 9, 27, 81, 243}).value_exact == Rational(1, 4));
  CHECK(euler_transform_sum({1, 3, 9, 27, 81, 243}).exact);
}

TEST_CASE("euler transform series output") {
  TermSequence flat = euler_transform_series({1, 1, 1, 1});
  CHECK(flat.values[0] == Rational(1, 2));
  for (std::size_t i = 1; i < flat.values.size(); ++i) CHECK(flat.values[i].is_zero());

  // halved tail of the factorial series: 1, 3, 12, 60, 360, 2520, 20160, 181440
  std::vector<Rational> mags = {1, 3, 12, 60, 360, 2520, 20160, 181440};
  TermSequence t = euler_transform_series(mags);
  std::vector<Rational> expect = {Rational(1, 2),     Rational(-2, 4),    Rational(7, 8),
                                  Rational(-32, 16),  Rational(181, 32),  Rational(-1214, 64),
                                  Rational(9403, 128), Rational(-82508, 256)};
  CHECK(t.values == expect);

  // geometric magnitudes r^k transform into geometric terms of ratio (r-1)/2
  TermSequence g = euler_transform_series({1, 3, 9, 27, 81});
  std::vector<Rational> expect_g = {Rational(1, 2), Rational(-1, 2), Rational(1, 2),
                                    Rational(-1, 2), Rational(1, 2)};
  CHECK(g.values == expect_g);
}

TEST_CASE("euler transform fixed point on geometric magnitudes") {
  for (std::int64_t r : {1, 3}) {
    std::vector<Rational> mags;
    Rational p = 1;
    for (int k = 0; k < 10; ++k) {
      mags.push_back(p);
      p *= Rational(r);
    }
    ExtrapolationReport rep = euler_transform_sum(mags);
    CHECK(rep.exact);
    CHECK(rep.value_exact == Rational(1, r + 1));
  }
}

TEST_CASE("three-stage schedule lands on the exact printed rational") {
  ExtrapolationReport rep = reproduce_s16_schedule();
  CHECK(rep.value_exact == Rational(38015, 65536));
  CHECK(rep.value.to_fixed(5) == "0.58006");
  CHECK(rep.truncation_bound.signum() > 0);
}

TEST_CASE("auxiliary table recurrence") {
  std::vector<Rational> expect = {1, 2, 5, 16, 65, 326, 1957};
  CHECK(auxiliary_factorial_table(7) == expect);
}

TEST_CASE("newton extrapolation at zero") {
  // a degree-1 table extrapolates exactly
  ExtrapolationReport lin = newton_extrapolate_zero({2, 3, 4, 5});
  CHECK(lin.exact);
  CHECK(lin.value_exact == Rational(1));

  // polynomial tables of any degree below the depth are exact
  std::vector<Rational> squares;
  for (std::int64_t k = 1; k <= 6; ++k) squares.push_back(Rational(k * k));
  CHECK(newton_extrapolate_zero(squares).value_exact == Rational(0));

  // constant table
  ExtrapolationReport c = newton_extrapolate_zero({7, 7, 7});
  CHECK(c.value_exact == Rational(7));

  CHECK_THROWS_AS(newton_extrapolate_zero({1, 2}), std::invalid_argument);
}

TEST_CASE("newton extrapolation reproduces the seven-digit reciprocal scheme") {
  std::vector<Rational> aux = auxiliary_factorial_table(11);
  std::vector<Rational> recip7;
  for (const auto& a : aux)
    recip7.push_back(BigFloat::from_rational(a.reciprocal(), 24).rounded_at(7).to_rational());
  ExtrapolationReport rep = newton_extrapolate_zero(recip7, 5);
  CHECK(BigFloat::from_rational(rep.value_exact, 20).to_fixed(7) == "1.6517401");
  CHECK(rep.terms_used == 6);
}

TEST_CASE("newton extrapolation full precision uses the optimal cut") {
  std::vector<Rational> recip;
  for (const auto& a : auxiliary_factorial_table(13)) recip.push_back(a.reciprocal());
  ExtrapolationReport rep = newton_extrapolate_zero(recip);
  // cut after t_4 (first local minimum of |t|), half of t_5 added back
  CHECK(rep.terms_used == 5);
  CHECK(rep.truncation_bound.signum() > 0);
  BigFloat inv_g = BigFloat::div(BigFloat(1), gompertz_series_oracle(16), 16);
  CHECK((rep.value - inv_g).abs() < BigFloat("0.002"));
}

TEST_CASE("log extrapolation of the auxiliary table") {
  std::vector<Rational> aux = auxiliary_factorial_table(9);
  LogExtrapolationReport rep = log_extrapolate(aux, 7, 6);
  CHECK(rep.log_value.negated().to_fixed(7) == "0.2220911");
  CHECK((rep.value - BigFloat("0.59966")).abs() < BigFloat("0.00005"));
  CHECK(rep.terms_used == 6);
}

TEST_CASE("log extrapolation of a constant table returns the constant") {
  LogExtrapolationReport rep = log_extrapolate({5, 5, 5}, 7);
  CHECK((rep.value - BigFloat(5)).abs() < BigFloat("0.00001"));
}

TEST_CASE("log extrapolation rejects non-positive values") {
  CHECK_THROWS_AS(log_extrapolate({1, -2, 3}, 7), std::domain_error);
}

TEST_CASE("euler transform turns the alternating harmonic series convergent") {
  std::vector<Rational> mags;
  for (std::int64_t k = 1; k <= 40; ++k) mags.emplace_back(1, k);
  ExtrapolationReport rep = euler_transform_sum(mags);
  // ln 2 via the quadrature route: integral of 1/v over [1, 2]
  CurveSpec curve = CurveSpec::make_custom(
      [](const BigFloat& v, int digits) { return BigFloat::div(BigFloat(1), v, digits); },
      Rational(1), Rational(2));
  BigFloat ln2 = adaptive_integral(curve, BigFloat(BigInt(1), -30)).value;
  CHECK((rep.value - ln2).abs() < BigFloat(BigInt(1), -10));
}
