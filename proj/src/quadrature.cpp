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

#include "summa/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace summa {

CurveSpec CurveSpec::v1() {
  CurveSpec c;
  c.kind = CurveKind::kV1;
  return c;
}

CurveSpec CurveSpec::v2() {
  CurveSpec c;
  c.kind = CurveKind::kV2;
  return c;
}

CurveSpec CurveSpec::odd_fact() {
  CurveSpec c;
  c.kind = CurveKind::kOddFact;
  return c;
}

CurveSpec CurveSpec::make_custom(std::function<BigFloat(const BigFloat&, int)> f, Rational lower,
                                 Rational upper) {
  CurveSpec c;
  c.kind = CurveKind::kCustom;
  c.custom = std::move(f);
  c.lower = std::move(lower);
  c.upper = std::move(upper);
  c.singular_left = false;
  return c;
}

namespace {

// e^t underflows past the digit budget: treat as an exact 0 rather than
// grinding through a 10^10-halving argument reduction.
bool exp_underflows(const BigFloat& t, int digits) {
  double td = t.to_double_approx();
  return td < -2.302585092994046 * (digits + 24);
}

}  // namespace

BigFloat CurveSpec::evaluate(const BigFloat& x, int digits) const {
  int work = digits + 6;
  switch (kind) {
    case CurveKind::kV1: {
      if (x.is_zero()) return BigFloat();
      // y = e^(1 - 1/x)/x
      BigFloat t = BigFloat(1) - BigFloat::div(BigFloat(1), x, work);
      if (exp_underflows(t, digits)) return BigFloat();
      return BigFloat::div(BigFloat::exp(t, work), x, digits);
    }
    case CurveKind::kV2: {
      if (x.is_zero()) return BigFloat();
      // y = 1/(1 - ln v)
      BigFloat den = BigFloat(1) - BigFloat::ln(x, work);
      return BigFloat::div(BigFloat(1), den, digits);
    }
    case CurveKind::kOddFact: {
      if (x.is_zero()) return BigFloat();
      // y = e^(1/2) e^(-1/(2 x^2)) / x^2
      BigFloat x2 = x * x;
      BigFloat t = BigFloat("0.5") - BigFloat::div(BigFloat(1), (x2 + x2), work);
      if (exp_underflows(t, digits)) return BigFloat();
      return BigFloat::div(BigFloat::exp(t, work), x2, digits);
    }
    case CurveKind::kCustom:
      return custom(x, digits);
  }
  throw std::logic_error("CurveSpec: bad kind");
}

std::vector<BigFloat> ordinates(const CurveSpec& curve, const std::vector<Rational>& grid,
                                int digits) {
  std::vector<BigFloat> out;
  out.reserve(grid.size());
  for (const Rational& g : grid)
    out.push_back(curve.evaluate(BigFloat::from_rational(g, digits + 8), digits));
  return out;
}

QuadratureResult trapezoid(const CurveSpec& curve, std::size_t panels, int digits) {
  if (panels < 1) throw std::invalid_argument("trapezoid: panels must be >= 1");
  int work = digits + 8;
  Rational width = curve.upper - curve.lower;
  Rational h = width / Rational(static_cast<std::int64_t>(panels));

  QuadratureResult res;
  res.panels = panels;
  BigFloat hf = BigFloat::from_rational(h, work);
  BigFloat sum;
  for (std::size_t k = 0; k <= panels; ++k) {
    Rational xk = curve.lower + h * Rational(static_cast<std::int64_t>(k));
    BigFloat y = curve.evaluate(BigFloat::from_rational(xk, work + 4), work);
    res.ordinates.push_back(y);
    ++res.evaluations;
    BigFloat weighted = (k == 0 || k == panels) ? y.halved() : y;
    sum = (sum + weighted).rounded(work + 4);
  }
  res.value = (sum * hf).rounded(digits);

  // one halving for the error estimate, reusing nothing but cheap enough
  BigFloat mid_sum;
  Rational h2 = h / Rational(2);
  for (std::size_t k = 0; k < panels; ++k) {
    Rational xm = curve.lower + h * Rational(static_cast<std::int64_t>(k)) + h2;
    mid_sum = (mid_sum + curve.evaluate(BigFloat::from_rational(xm, work + 4), work))
                  .rounded(work + 4);
    ++res.evaluations;
  }
  BigFloat refined = ((sum + mid_sum) * BigFloat::from_rational(h2, work)).rounded(work);
  res.error_estimate = (refined - res.value).abs().rounded(8);
  return res;
}

namespace {

struct Band {
  Rational a;
  Rational b;
};

// Romberg ladder on one band; returns the converged value, adds the last
// Richardson delta to err, counts evaluations. Throws when the band refuses
// to converge within the refinement budget.
BigFloat romberg_band(const CurveSpec& curve, const Band& band, const BigFloat& band_tol,
                      int work, BigFloat& err, std::size_t& evals) {
  const int kMaxLevels = 16;
  BigFloat a = BigFloat::from_rational(band.a, work + 4);
  BigFloat b = BigFloat::from_rational(band.b, work + 4);
  BigFloat h = (b - a);
  BigFloat fa = curve.evaluate(a, work);
  BigFloat fb = curve.evaluate(b, work);
  evals += 2;

  std::vector<std::vector<BigFloat>> R;
  R.push_back({((fa + fb) * h.halved()).rounded(work)});
  for (int k = 1; k <= kMaxLevels; ++k) {
    h = h.halved();
    std::size_t points = static_cast<std::size_t>(1) << (k - 1);
    BigFloat sum;
    for (std::size_t i = 0; i < points; ++i) {
      BigFloat x = a + h * BigFloat(static_cast<std::int64_t>(2 * i + 1));
      sum = (sum + curve.evaluate(x, work)).rounded(work + 4);
      ++evals;
    }
    std::vector<BigFloat> row;
    row.push_back((R[k - 1][0].halved() + sum * h).rounded(work));
    BigFloat pow4(1);
    for (int j = 1; j <= k; ++j) {
      pow4 *= BigFloat(4);
      BigFloat num = pow4 * row[j - 1] - R[k - 1][j - 1];
      row.push_back(BigFloat::div(num, pow4 - BigFloat(1), work));
    }
    BigFloat delta = (row[k] - R[k - 1][k - 1]).abs();
    R.push_back(row);
    if (delta < band_tol) {
      err += delta;
      return row[k];
    }
  }
  throw std::runtime_error("adaptive_integral: tolerance unreachable at the refinement budget");
}

}  // namespace

QuadratureResult adaptive_integral(const CurveSpec& curve, const BigFloat& tol) {
  if (tol.signum() <= 0) throw std::invalid_argument("adaptive_integral: tol must be positive");
  std::int64_t tol_top =
      tol.exponent10() + static_cast<std::int64_t>(tol.mantissa().digit_count()) - 1;
  int work = static_cast<int>(std::max<std::int64_t>(16, -tol_top + 10));
  if (work > 200) throw std::invalid_argument("adaptive_integral: tolerance below the precision budget");

  QuadratureResult res;
  res.tolerance = tol;

  std::vector<Band> bands;
  BigFloat sliver_bound;
  if (curve.singular_left && !curve.lower.is_zero())
    throw std::invalid_argument("adaptive_integral: singular grading assumes a left endpoint at 0");
  if (curve.singular_left) {
    // dyadic grading x_j = 2^-j toward the singular endpoint until the
    // leftover sliver (y increasing: area <= y(a) a) is negligible
    Rational a = curve.upper;
    int j = 0;
    while (true) {
      Rational next = a / Rational(2);
      bands.push_back({next, a});
      a = next;
      ++j;
      BigFloat ya = curve.evaluate(BigFloat::from_rational(a, work + 4), work);
      BigFloat bound = ya * BigFloat::from_rational(a, work);
      if (BigFloat::compare(bound, tol.halved().halved()) < 0) {
        sliver_bound = bound;
        break;
      }
      if (j > 2000) throw std::runtime_error("adaptive_integral: singular grading stalled");
    }
  } else {
    bands.push_back({curve.lower, curve.upper});
  }

  BigFloat total;
  Rational full_width = curve.upper - curve.lower;
  for (const Band& band : bands) {
    Rational w = band.b - band.a;
    BigFloat share = BigFloat::from_rational(w / full_width, 20);
    BigFloat band_tol = (tol.halved() * share).rounded(8);
    if (band_tol.is_zero()) band_tol = tol.halved().halved().halved();
    total = (total + romberg_band(curve, band, band_tol, work, res.error_estimate,
                                  res.evaluations))
                .rounded(work + 6);
  }
  if (curve.singular_left && !sliver_bound.is_zero()) {
    // count half the sliver as area, the whole of it as uncertainty
    total += sliver_bound.halved();
    res.error_estimate += sliver_bound;
  }
  res.value = total.rounded(work);
  res.error_estimate = res.error_estimate.rounded(8);
  return res;
}

BigFloat gompertz_constant(int digits) {
  BigFloat tol(BigInt(1), -(digits + 2));
  QuadratureResult v1 = adaptive_integral(CurveSpec::v1(), tol);
  QuadratureResult v2 = adaptive_integral(CurveSpec::v2(), tol);
  BigFloat diff = (v1.value - v2.value).abs();
  if (diff > BigFloat(BigInt(4), -(digits + 2)))
    throw std::runtime_error("gompertz_constant: V1/V2 routes disagree past the digit budget");
  return v1.value.rounded_at(digits);
}

namespace {

// Euler-Mascheroni constant, 40 decimals.
const char* kGammaLiteral = "0.5772156649015328606065120900824024310422";

}  // namespace

BigFloat gompertz_series_oracle(int digits) {
  if (digits > 35) throw std::invalid_argument("gompertz_series_oracle: gamma literal is 40 digits");
  // E1(1) = -gamma + sum_{k>=1} (-1)^(k+1) / (k k!)
  Rational sum = 0;
  Rational fact = 1;
  for (int k = 1; k <= digits + 25; ++k) {
    fact *= Rational(k);
    Rational term = Rational(1) / (Rational(k) * fact);
    sum += (k % 2 == 1) ? term : -term;
  }
  int work = digits + 6;
  BigFloat e1 = BigFloat::from_rational(sum, work) - BigFloat(std::string_view(kGammaLiteral));
  return (BigFloat::e(work) * e1).rounded(digits);
}

BigFloat odd_factorial_series_oracle(int digits) {
  // e^(1/2) ( sqrt(pi/2) - sum_{k>=0} (-1)^k / (2^k k! (2k+1)) )
  int work = digits + 8;
  Rational sum = 0;
  Rational fact = 1;
  Rational pow2 = 1;
  for (int k = 0; k <= digits + 20; ++k) {
    if (k > 0) {
      fact *= Rational(k);
      pow2 *= Rational(2);
    }
    Rational term = Rational(1) / (pow2 * fact * Rational(2 * k + 1));
    sum += (k % 2 == 0) ? term : -term;
  }
  BigFloat half_pi = BigFloat::div(BigFloat::pi(work), BigFloat(2), work);
  BigFloat root = BigFloat::sqrt(half_pi, work);
  BigFloat e_half = BigFloat::exp(BigFloat("0.5"), work);
  return (e_half * (root - BigFloat::from_rational(sum, work))).rounded(digits);
}

}  // namespace summa
