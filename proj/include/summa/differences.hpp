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

#ifndef SUMMA_DIFFERENCES_HPP
#define SUMMA_DIFFERENCES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "summa/bigfloat.hpp"
#include "summa/rational.hpp"
#include "summa/series.hpp"

namespace summa {

// Triangular table of forward differences. rows[0] is the input;
// rows[k+1][i] = rows[k][i+1] - rows[k][i] (ascending convention).
struct DifferenceTable {
  std::vector<std::vector<Rational>> rows;

  std::size_t depth() const { return rows.empty() ? 0 : rows.size() - 1; }
  // leading entry of row k (alpha, beta, gamma, ... of the worked tables)
  const Rational& top(std::size_t k) const { return rows.at(k).front(); }
};

DifferenceTable difference_table(const std::vector<Rational>& values, std::size_t depth);

struct ExtrapolationReport {
  Rational value_exact;                   // meaningful when `exact` is true
  BigFloat value;                         // always set (decimal view of the result)
  bool exact = false;                     // value_exact holds the full answer
  std::size_t terms_used = 0;
  std::vector<Rational> correction_series;  // the transformed series actually summed
  BigFloat truncation_bound;              // |first omitted term|, 0 when none
};

// Euler transform of an alternating series given by its term magnitudes:
//     s = a/2 - alpha/4 + beta/8 - gamma/16 + ...
// with alpha, beta, ... the leading ascending differences of the magnitudes.
// The transform closes exactly when a difference row vanishes (polynomial
// magnitudes) or turns geometric (the remaining tail sums in closed form);
// otherwise it truncates at `depth` difference columns and reports the first
// omitted term. Magnitudes may carry signs when a formally alternating
// series is fed back through the transform, as the worked log tables do.
ExtrapolationReport euler_transform_sum(const std::vector<Rational>& magnitudes,
                                        std::optional<std::size_t> depth = std::nullopt);

// The transformed series itself: a/2, -alpha/4, beta/8, ... so the transform
// can be iterated on its own output.
TermSequence euler_transform_series(const std::vector<Rational>& magnitudes);

// The three-stage transform schedule applied to 1 - 1 + 2 - 6 + 24 - ...:
// cancel the leading 1 - 1, halve, transform, re-transform the printed tail
// twice. Returns exactly 38015/65536.
ExtrapolationReport reproduce_s16_schedule();

// Newton forward-difference value at index 0 of a table indexed 1,2,3,...
// built with descending differences (each term minus its successor):
//     f(0) = t_0 + t_1 + t_2 + ...   with t_k the leading differences.
// With `depth` given, sums exactly depth+1 terms (the hand-computed scheme
// stops at the fifth difference column). Without it, the divergent tail is
// cut at the first local minimum of |t_k| and half of the first omitted term
// is added back, the classical reading of an asymptotic remainder.
ExtrapolationReport newton_extrapolate_zero(const std::vector<Rational>& table_values,
                                            std::optional<std::size_t> depth = std::nullopt);

// Log-domain variant: extrapolates base-10 logarithms of a positive table at
// a fixed digit budget, sums the alternating correction series through the
// Euler transform, and returns 10^(extrapolated log). `transform_terms`
// pins how many transformed terms are summed (the worked table uses 6).
struct LogExtrapolationReport {
  BigFloat value;               // A = 10^(log-extrapolation)
  BigFloat log_value;           // the extrapolated log10
  std::vector<BigFloat> transformed_terms;
  std::size_t terms_used = 0;
};

LogExtrapolationReport log_extrapolate(const std::vector<Rational>& table_values, int digits,
                                       std::optional<std::size_t> transform_terms = std::nullopt);

// a_1 = 1, a_{k+1} = k a_k + 1: the auxiliary table 1, 2, 5, 16, 65, ...
std::vector<Rational> auxiliary_factorial_table(std::size_t count);

}  // namespace summa

#endif  // SUMMA_DIFFERENCES_HPP
