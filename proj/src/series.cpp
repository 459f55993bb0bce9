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

#include "summa/series.hpp"

namespace summa {

SeriesSpec SeriesSpec::factorial(Rational x) {
  SeriesSpec s;
  s.family = SeriesFamily::kFactorial;
  s.point_x = std::move(x);
  return s;
}

SeriesSpec SeriesSpec::hypergeometric(Rational p, Rational q, Rational m, Rational x) {
  SeriesSpec s;
  s.family = SeriesFamily::kHypergeometric;
  s.p = std::move(p);
  s.q = std::move(q);
  s.m = std::move(m);
  s.point_x = std::move(x);
  return s;
}

SeriesSpec SeriesSpec::odd_double_factorial(Rational x) {
  SeriesSpec s;
  s.family = SeriesFamily::kOddDoubleFactorial;
  s.point_x = std::move(x);
  return s;
}

SeriesSpec SeriesSpec::geometric(Rational ratio) {
  SeriesSpec s;
  s.family = SeriesFamily::kGeometric;
  s.ratio = std::move(ratio);
  s.sign_pattern = SignPattern::kConstant;
  return s;
}

SeriesSpec SeriesSpec::custom(std::vector<Rational> coefficients, Rational x) {
  SeriesSpec s;
  s.family = SeriesFamily::kCustom;
  s.coefficients = std::move(coefficients);
  s.point_x = std::move(x);
  return s;
}

namespace {

// x^e for rational exponent e: defined when e is an integer, or trivially
// when x == 1. The in-scope families never need anything else.
Rational rational_power(const Rational& x, const Rational& e) {
  if (x == Rational(1)) return 1;
  if (!e.is_integer()) throw std::domain_error("terms: non-integer exponent at x != 1");
  if (!e.num().fits_int64()) throw std::domain_error("terms: exponent too large");
  return x.pow(e.num().to_int64());
}

}  // namespace

TermSequence terms(const SeriesSpec& spec, std::size_t k) {
  if (k < 1) throw std::invalid_argument("terms: k must be >= 1");
  TermSequence out;
  out.values.reserve(k);
  switch (spec.family) {
    case SeriesFamily::kFactorial: {
      Rational coeff = 1;  // k!
      for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) coeff *= Rational(static_cast<std::int64_t>(i));
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        out.values.push_back(sign * coeff * spec.point_x.pow(static_cast<std::int64_t>(i)));
      }
      break;
    }
    case SeriesFamily::kHypergeometric: {
      // z = x^m - p x^(m+q) + p(p+q) x^(m+2q) - ...
      Rational coeff = 1;
      Rational factor = spec.p;
      for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) {
          coeff *= factor;
          factor += spec.q;
        }
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        Rational expn = spec.m + Rational(static_cast<std::int64_t>(i)) * spec.q;
        out.values.push_back(sign * coeff * rational_power(spec.point_x, expn));
      }
      break;
    }
    case SeriesFamily::kOddDoubleFactorial: {
      // z = x - 1x^3 + 1*3 x^5 - 1*3*5 x^7 + ...
      Rational coeff = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) coeff *= Rational(static_cast<std::int64_t>(2 * i - 1));
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        out.values.push_back(sign * coeff *
                             spec.point_x.pow(static_cast<std::int64_t>(2 * i + 1)));
      }
      break;
    }
    case SeriesFamily::kGeometric: {
      Rational term = 1;
      for (std::size_t i = 0; i < k; ++i) {
        out.values.push_back(term);
        term *= spec.ratio;
      }
      break;
    }
    case SeriesFamily::kCustom: {
      if (spec.coefficients.size() < k)
        throw std::length_error("terms: custom family has fewer coefficients than requested");
      for (std::size_t i = 0; i < k; ++i)
        out.values.push_back(spec.coefficients[i] *
                             spec.point_x.pow(static_cast<std::int64_t>(i)));
      break;
    }
  }
  return out;
}

std::vector<Rational> partial_sums(const TermSequence& t) {
  std::vector<Rational> out;
  out.reserve(t.values.size());
  Rational acc = 0;
  for (const Rational& v : t.values) {
    acc += v;
    out.push_back(acc);
  }
  return out;
}

Rational geometric_value(const Rational& ratio) {
  if (ratio == Rational(1)) throw std::domain_error("geometric_value: pole at ratio = 1");
  return Rational(1) / (Rational(1) - ratio);
}

Genus classify_genus(const SeriesSpec& spec, std::size_t probe_depth) {
  if (probe_depth < 8) throw std::invalid_argument("classify_genus: probe too shallow");
  TermSequence t = terms(spec, probe_depth);

  bool constant_signs = true;
  bool alternating_signs = true;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (t.values[i].is_zero())
      throw UnclassifiedError("classify_genus: zero term in probe window");
    if (i > 0) {
      int prev = t.values[i - 1].signum();
      int cur = t.values[i].signum();
      if (cur != prev) constant_signs = false;
      if (cur == prev) alternating_signs = false;
    }
  }
  if (!constant_signs && !alternating_signs)
    throw UnclassifiedError("classify_genus: mixed sign pattern");

  std::vector<Rational> mag;
  mag.reserve(t.values.size());
  for (const Rational& v : t.values) mag.push_back(v.abs());

  // Boundedness over the tail half of the window.
  std::size_t half = probe_depth / 2;
  bool non_increasing = true;
  bool strictly_increasing = true;
  for (std::size_t i = half; i + 1 < mag.size(); ++i) {
    if (mag[i + 1] > mag[i]) non_increasing = false;
    if (mag[i + 1] <= mag[i]) strictly_increasing = false;
  }

  bool bounded;
  if (non_increasing) {
    bounded = true;
  } else if (strictly_increasing) {
    // Increments d_k = m_{k+1} - m_k. Non-decreasing increments diverge.
    // Decreasing increments: compare the decay across one octave of the
    // window; faster than 1/k (ratio < 1/2 per doubling) means the increments
    // sum to something finite and the terms stay bounded.
    Rational d_mid = mag[half + 1] - mag[half];
    Rational d_last = mag[mag.size() - 1] - mag[mag.size() - 2];
    bool increments_growing = true;
    for (std::size_t i = half; i + 2 < mag.size(); ++i) {
      if (mag[i + 2] - mag[i + 1] < mag[i + 1] - mag[i]) increments_growing = false;
    }
    if (increments_growing) {
      bounded = false;
    } else if (d_last * Rational(2) < d_mid) {
      bounded = true;  // decay faster than 1/k per octave
    } else if (d_last * Rational(4) > d_mid * Rational(3)) {
      bounded = false;  // decay clearly slower than 1/k
    } else {
      // decay indistinguishable from the 1/k boundary at this depth
      throw UnclassifiedError("classify_genus: growth inconclusive within probe window");
    }
  } else {
    throw UnclassifiedError("classify_genus: non-monotone magnitudes in probe window");
  }

  if (bounded) return constant_signs ? Genus::kI : Genus::kII;
  return constant_signs ? Genus::kIII : Genus::kIV;
}

const char* genus_name(Genus g) {
  switch (g) {
    case Genus::kI: return "I";
    case Genus::kII: return "II";
    case Genus::kIII: return "III";
    case Genus::kIV: return "IV";
  }
  return "?";
}

}  // namespace summa
