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

#include "summa/differences.hpp"

#include <stdexcept>

namespace summa {

DifferenceTable difference_table(const std::vector<Rational>& values, std::size_t depth) {
  if (depth >= values.size())
    throw std::out_of_range("difference_table: depth must be < len(values)");
  DifferenceTable t;
  t.rows.reserve(depth + 1);
  t.rows.push_back(values);
  for (std::size_t k = 0; k < depth; ++k) {
    const auto& prev = t.rows.back();
    std::vector<Rational> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    t.rows.push_back(std::move(next));
  }
  return t;
}

namespace {

std::vector<Rational> ascending_row(const std::vector<Rational>& row) {
  std::vector<Rational> next;
  next.reserve(row.size() - 1);
  for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
  return next;
}

// Is the row geometric with a single ratio? Constant rows count (ratio 1).
// Two entries are one ratio, not a pattern; demand at least three.
bool geometric_ratio(const std::vector<Rational>& row, Rational& ratio_out) {
  if (row.size() < 3) return false;
  if (row[0].is_zero()) return false;
  Rational r = row[1] / row[0];
  for (std::size_t i = 1; i + 1 < row.size(); ++i) {
    if (row[i].is_zero()) return false;
    if (row[i + 1] / row[i] != r) return false;
  }
  ratio_out = r;
  return true;
}

bool all_zero(const std::vector<Rational>& row) {
  for (const auto& v : row)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

ExtrapolationReport euler_transform_sum(const std::vector<Rational>& magnitudes,
                                        std::optional<std::size_t> depth) {
  if (magnitudes.empty()) throw std::invalid_argument("euler_transform_sum: empty input");
  std::size_t max_depth = depth.value_or(magnitudes.size() - 1);
  if (max_depth >= magnitudes.size())
    throw std::out_of_range("euler_transform_sum: depth must be < len(magnitudes)");

  ExtrapolationReport rep;
  Rational sum = 0;
  Rational denom = 2;  // 2^(k+1)
  std::vector<Rational> row = magnitudes;
  std::size_t k = 0;
  while (true) {
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Rational ratio;
    if (all_zero(row)) {
      rep.exact = true;
      break;
    }
    if (geometric_ratio(row, ratio)) {
      // Remaining tail: sum_{j>=k} (-1)^j d_j[0]/2^(j+1) with d_{j+1}[0] =
      // (ratio-1) d_j[0]; a geometric series worth 2/(ratio+1) of its head.
      if (ratio == Rational(-1))
        throw std::domain_error("euler_transform_sum: geometric tail pole at ratio -1");
      Rational head = sign * row[0] / denom;
      Rational tail = head * Rational(2) / (ratio + Rational(1));
      sum += tail;
      rep.correction_series.push_back(tail);
      ++k;
      rep.exact = true;
      break;
    }
    Rational term = sign * row[0] / denom;
    sum += term;
    rep.correction_series.push_back(term);
    ++k;
    if (k > max_depth || row.size() < 2) {
      if (row.size() >= 2) {
        std::vector<Rational> next = ascending_row(row);
        if (!next.empty()) {
          Rational omitted = next[0] / (denom * Rational(2));
          rep.truncation_bound = BigFloat::from_rational(omitted.abs(), 20);
        }
      }
      break;
    }
    row = ascending_row(row);
    denom *= Rational(2);
  }
  rep.terms_used = k;
  rep.value_exact = sum;
  rep.value = BigFloat::from_rational(sum, working_precision());
  return rep;
}

TermSequence euler_transform_series(const std::vector<Rational>& magnitudes) {
  if (magnitudes.empty()) throw std::invalid_argument("euler_transform_series: empty input");
  TermSequence out;
  std::vector<Rational> row = magnitudes;
  Rational denom = 2;
  std::size_t k = 0;
  while (!row.empty()) {
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    out.values.push_back(sign * row[0] / denom);
    if (row.size() == 1) break;
    row = ascending_row(row);
    denom *= Rational(2);
    ++k;
  }
  return out;
}

ExtrapolationReport reproduce_s16_schedule() {
  // Stage 1: A = 1 - 1 + 2 - 6 + 24 - ...; the leading 1 - 1 cancels and the
  // remainder, halved, gives magnitudes 1, 3, 12, 60, 360, 2520, 20160, 181440.
  TermSequence fact = terms(SeriesSpec::factorial(1), 10);
  std::vector<Rational> mags1;
  for (std::size_t i = 2; i < fact.values.size(); ++i)
    mags1.push_back(fact.values[i].abs() / Rational(2));
  TermSequence half_transformed = euler_transform_series(mags1);

  // Stage 2: doubled back to A, the first two terms 1 - 1 cancel again.
  std::vector<Rational> mags2;
  for (std::size_t i = 2; i < half_transformed.values.size(); ++i)
    mags2.push_back((half_transformed.values[i] * Rational(2)).abs());
  TermSequence second = euler_transform_series(mags2);

  // Stage 3: keep 7/8 - 18/32 = 5/16 and re-transform the printed tail.
  Rational partial = second.values[0] + second.values[1];
  std::vector<Rational> mags3;
  for (std::size_t i = 2; i < second.values.size(); ++i) mags3.push_back(second.values[i].abs());
  ExtrapolationReport tail = euler_transform_sum(mags3);

  ExtrapolationReport rep;
  rep.value_exact = partial + tail.value_exact;
  rep.value = BigFloat::from_rational(rep.value_exact, working_precision());
  rep.exact = true;
  rep.terms_used = 2 + tail.terms_used;
  rep.correction_series = tail.correction_series;
  // omitted: everything beyond the printed 10-term factorial prefix
  rep.truncation_bound = BigFloat::from_rational(
      (half_transformed.values.back() * Rational(2)).abs(), 20);
  return rep;
}

namespace {

// Leading descending differences t_0 = v_0, t_k = top of the k-th
// "each term minus its successor" column.
std::vector<Rational> descending_tops(const std::vector<Rational>& values) {
  std::vector<Rational> tops;
  tops.reserve(values.size());
  std::vector<Rational> row = values;
  tops.push_back(row[0]);
  while (row.size() > 1) {
    std::vector<Rational> next;
    next.reserve(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i] - row[i + 1]);
    tops.push_back(next[0]);
    row = std::move(next);
  }
  return tops;
}

}  // namespace

ExtrapolationReport newton_extrapolate_zero(const std::vector<Rational>& table_values,
                                            std::optional<std::size_t> depth) {
  if (table_values.size() < 3)
    throw std::invalid_argument("newton_extrapolate_zero: need at least 3 values");
  std::vector<Rational> tops = descending_tops(table_values);

  ExtrapolationReport rep;
  if (depth.has_value()) {
    std::size_t d = *depth;
    if (d >= tops.size()) throw std::out_of_range("newton_extrapolate_zero: depth out of range");
    Rational sum = 0;
    for (std::size_t k = 0; k <= d; ++k) {
      sum += tops[k];
      rep.correction_series.push_back(tops[k]);
    }
    rep.terms_used = d + 1;
    rep.value_exact = sum;
    rep.exact = true;
    rep.value = BigFloat::from_rational(sum, working_precision());
    if (d + 1 < tops.size())
      rep.truncation_bound = BigFloat::from_rational(tops[d + 1].abs(), 20);
    return rep;
  }

  // First local minimum of |t_k|: the optimal truncation point of the
  // (generally divergent) correction series. Past it, add half the first
  // omitted term; the bracketing partial sums straddle the limit.
  std::size_t cut = tops.size() - 1;  // default: take everything
  bool midpoint = false;
  for (std::size_t k = 1; k + 1 < tops.size(); ++k) {
    if (tops[k].abs() <= tops[k - 1].abs() && tops[k].abs() < tops[k + 1].abs()) {
      cut = k;
      midpoint = true;
      break;
    }
  }
  Rational sum = 0;
  for (std::size_t k = 0; k <= cut; ++k) {
    sum += tops[k];
    rep.correction_series.push_back(tops[k]);
  }
  rep.terms_used = cut + 1;
  if (midpoint) {
    sum += tops[cut + 1] / Rational(2);
    rep.truncation_bound = BigFloat::from_rational(tops[cut + 1].abs(), 20);
    rep.exact = false;
  } else {
    rep.exact = true;
    rep.truncation_bound = BigFloat();
  }
  rep.value_exact = sum;
  rep.value = BigFloat::from_rational(sum, working_precision());
  return rep;
}

LogExtrapolationReport log_extrapolate(const std::vector<Rational>& table_values, int digits,
                                       std::optional<std::size_t> transform_terms) {
  if (table_values.size() < 3)
    throw std::invalid_argument("log_extrapolate: need at least 3 values");
  for (const auto& v : table_values)
    if (v.signum() <= 0) throw std::domain_error("log_extrapolate: values must be positive");

  // Base-10 logs rounded to the digit budget; thereafter everything is exact
  // fixed-point arithmetic, the way the printed tables behave.
  std::vector<Rational> logs;
  logs.reserve(table_values.size());
  int prec = digits + 12;
  for (const auto& v : table_values) {
    BigFloat lg = BigFloat::log10(BigFloat::from_rational(v, prec), prec - 4);
    logs.push_back(lg.rounded_at(digits).to_rational());
  }

  // Ascending differences; their leading entries are the alternating
  // correction series for the value at index 0:
  //   f(0) = f(1) - u_0 + u_1 - u_2 + ...  ->  f(1) - L,
  // and L is summed by the Euler transform of the signed u_k.
  DifferenceTable table = difference_table(logs, logs.size() - 1);
  std::vector<Rational> u;
  for (std::size_t k = 1; k < table.rows.size(); ++k) u.push_back(table.top(k));

  if (transform_terms.has_value() && (*transform_terms < 1 || *transform_terms > u.size()))
    throw std::out_of_range("log_extrapolate: transform_terms out of range");
  ExtrapolationReport transform =
      euler_transform_sum(u, transform_terms.has_value()
                                 ? std::optional<std::size_t>(*transform_terms - 1)
                                 : std::nullopt);
  std::size_t take = transform_terms.value_or(transform.terms_used);
  Rational L = 0;
  LogExtrapolationReport rep;
  for (std::size_t i = 0; i < transform.correction_series.size() && i < take; ++i) {
    L += transform.correction_series[i];
    rep.transformed_terms.push_back(BigFloat::from_rational(transform.correction_series[i], 20));
  }
  rep.terms_used = rep.transformed_terms.size();

  Rational log_a = logs[0] - L;
  rep.log_value = BigFloat::from_rational(log_a, prec).rounded_at(digits);
  rep.value = BigFloat::pow10(rep.log_value, prec - 2);
  return rep;
}

std::vector<Rational> auxiliary_factorial_table(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  Rational a = 1;
  out.push_back(a);
  for (std::size_t n = 1; n < count; ++n) {
    a = Rational(static_cast<std::int64_t>(n)) * a + Rational(1);
    out.push_back(a);
  }
  return out;
}

}  // namespace summa
