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

#ifndef SUMMA_CONTINUED_FRACTION_HPP
#define SUMMA_CONTINUED_FRACTION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "summa/bigfloat.hpp"
#include "summa/rational.hpp"
#include "summa/series.hpp"

namespace summa {

// Euler-type continued fraction: unit partial denominators, partial numerator
// at level k equal to numerators[k] * x^power. The top of the fraction is
// leading * x^leading_power over (1 + ...).
struct EulerCF {
  Rational leading = 1;
  std::int64_t leading_power = 0;
  std::vector<Rational> numerators;
  std::int64_t power = 1;
};

// Regular continued fraction [a0; a1, a2, ...], unit numerators.
struct RegularCF {
  std::vector<BigInt> quotients;
  bool truncated_by_precision = false;
};

// Convergent kept as the raw recurrence pair, never reduced (20/34 stays
// 20/34, as the printed tables have it). side marks the interlacing bound.
struct ConvergentPair {
  BigInt p;
  BigInt q;
  std::size_t index = 0;
  enum class Side { kLower, kUpper } side = Side::kLower;

  Rational reduced() const { return Rational(p, q); }
};

// t -> (a + b t) / (c + d t) with integer entries and nonzero determinant.
struct LinearFractionalMap {
  BigInt a, b, c, d;

  static LinearFractionalMap identity() { return {BigInt(0), BigInt(1), BigInt(1), BigInt(0)}; }
  BigInt determinant() const { return a * d - b * c; }
  bool is_identity() const;

  Rational apply(const Rational& t) const;
  BigFloat apply(const BigFloat& t, int digits) const;
  // this after other: (this ∘ other)(t) = this(other(t))
  LinearFractionalMap compose(const LinearFractionalMap& other) const;
};

// Closure of a continued-fraction tail whose numerator pairs grow by one:
// a-1, a-1, a, a, a+1, ...  The arithmetic-progression assumption r + t = 2s
// gives 2s^3 + 2s^2 - (2a-1)s - a = 0 and r = (a-1)(s+1)/(s+a).
struct TailClosure {
  Rational a;
  BigFloat s;                    // cubic root
  BigFloat r;                    // closed tail value
  std::vector<Rational> polynomial;  // coefficients of 2s^3 + 2s^2 - (2a-1)s - a, ascending
};

struct CfBreakdownError : std::runtime_error {
  explicit CfBreakdownError(std::size_t level)
      : std::runtime_error("series_to_cf: zero leading coefficient at level " +
                           std::to_string(level)),
        level(level) {}
  std::size_t level;
};

// Successive-division conversion of a power series (coefficients[0] must be 1)
// into an Euler-type continued fraction: 1/(1 + c_1 x/(1 + c_2 x/(1 + ...))).
// Exact; a vanishing leading remainder coefficient is an error, not a skip.
EulerCF series_to_cf(const std::vector<Rational>& coefficients, std::size_t depth);

// Parametric family for z = 1 - p x + p(p+q) x^2 - ...:
// numerators p, q, p+q, 2q, p+2q, 3q, p+3q, 4q, ...
EulerCF hypergeometric_cf(const Rational& p, const Rational& q, std::size_t depth);

// Numerator law of the Riccati-derived fraction, normalized by the common
// denominator b: (mb+ab+cf)/b, (mb-nb+cf)/b, (2mb-nb+ab+cf)/b, ...
std::vector<Rational> ode_cf_numerators(const Rational& f, const Rational& a, const Rational& b,
                                        const Rational& c, const Rational& m, const Rational& n,
                                        std::size_t depth);

// Convergents by the three-term recurrence, seeded 0/1 then leading/1, raw
// (unreduced) integer pairs. Partial numerators must be integers at this x.
std::vector<ConvergentPair> convergents(const EulerCF& cf, const Rational& x, std::size_t count);

// Repeated pairwise arithmetic means; round 0 is the input, each later round
// is one averaging pass (exact in decimal arithmetic).
std::vector<std::vector<BigFloat>> interleave_means(const std::vector<BigFloat>& values,
                                                    std::size_t rounds);

// Positive root of r^2 + r = a, i.e. (sqrt(4a+1) - 1)/2.
BigFloat tail_quadratic(const Rational& a, int digits = 20);

// Cubic closure for paired numerators a-1, a-1, a, a, a+1, ... (see TailClosure).
TailClosure tail_cubic(const Rational& a, int digits);

// Cubic closure for single-step numerators n0, n0+1, n0+2, ...:
// p = n0/(1+q), q = (n0+1)/(1+r), p + r = 2q  ->  2q^3 + 3q^2 - 2 n0 q - (n0+1) = 0.
// Returns s = the q-root and r = the closed tail value p.
TailClosure tail_cubic_stepped(const Rational& n0, int digits);

struct TailComposition {
  BigFloat value;
  std::vector<LinearFractionalMap> blocks;  // outermost first
};

// cut_indices are cumulative numerator counts (the leading numerator is
// index 0) partitioning the fraction into blocks; each block composes to an
// exact integer linear-fractional map, applied to tail_value innermost-out.
TailComposition compose_tail(const EulerCF& cf, const Rational& x,
                             const std::vector<std::size_t>& cut_indices,
                             const BigFloat& tail_value, int digits);

// Build the family's continued fraction, close the tail with the matching
// cubic, compose, and return the value. Families: factorial, odd double
// factorial, hypergeometric (quadratic closure for the generic family).
BigFloat sum_by_cf_closure(const SeriesSpec& spec, std::size_t depth, int digits);

// Euclidean expansion of a positive decimal value. Quotients are exact for
// the value as given; expansion stops (flagged) once the continued-fraction
// error bound falls below the value's own resolution, never fabricating
// quotients past the input's precision.
RegularCF real_to_regular_cf(const BigFloat& value, std::size_t max_quotients);

// Standard p/q recurrence for a regular continued fraction. The convergent
// at index k satisfies |x - p_k/q_k| < 1/(q_k q_{k+1}).
std::vector<ConvergentPair> regular_convergents(const RegularCF& cf);

// Truncated power-series expansion of the fraction (round-trip check):
// coefficients through x^order of leading x^l / (1 + c_1 x^p / (1 + ...)).
std::vector<Rational> expand_to_series(const EulerCF& cf, std::size_t order);

}  // namespace summa

#endif  // SUMMA_CONTINUED_FRACTION_HPP
