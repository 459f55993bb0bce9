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

#include "summa/continued_fraction.hpp"

#include <algorithm>

namespace summa {

bool LinearFractionalMap::is_identity() const {
  return a.is_zero() && d.is_zero() && b == c && !b.is_zero();
}

Rational LinearFractionalMap::apply(const Rational& t) const {
  Rational num = Rational(a, BigInt(1)) + Rational(b, BigInt(1)) * t;
  Rational den = Rational(c, BigInt(1)) + Rational(d, BigInt(1)) * t;
  return num / den;
}

BigFloat LinearFractionalMap::apply(const BigFloat& t, int digits) const {
  BigFloat num = BigFloat(a, 0) + BigFloat(b, 0) * t;
  BigFloat den = BigFloat(c, 0) + BigFloat(d, 0) * t;
  return BigFloat::div(num, den, digits);
}

LinearFractionalMap LinearFractionalMap::compose(const LinearFractionalMap& o) const {
  // this(o(t)) where o(t) = (o.a + o.b t)/(o.c + o.d t)
  return LinearFractionalMap{a * o.c + b * o.a, a * o.d + b * o.b,
                             c * o.c + d * o.a, c * o.d + d * o.b};
}

EulerCF series_to_cf(const std::vector<Rational>& coefficients, std::size_t depth) {
  if (coefficients.empty() || coefficients[0] != Rational(1))
    throw std::invalid_argument("series_to_cf: leading coefficient must be 1");
  if (depth > coefficients.size() - 1)
    throw std::out_of_range("series_to_cf: depth exceeds available coefficients");

  // Successive division: with T0 = 1 and T1 = the input series, level k has
  // T_{k-1} - T_k = c_k x T_{k+1}; the c_k are the partial numerators.
  EulerCF cf;
  cf.leading = 1;
  cf.leading_power = 0;
  cf.power = 1;

  std::vector<Rational> prev(coefficients.size(), Rational(0));
  prev[0] = 1;                                 // T0 = 1
  std::vector<Rational> cur = coefficients;    // T1
  for (std::size_t level = 1; level <= depth; ++level) {
    // diff = T_{k-1} - T_k has zero constant term
    std::size_t len = std::min(prev.size(), cur.size());
    if (len < 2) break;
    std::vector<Rational> shifted(len - 1);
    for (std::size_t i = 1; i < len; ++i) shifted[i - 1] = prev[i] - cur[i];
    Rational c = shifted[0];
    if (c.is_zero()) {
      // all-zero remainder means the fraction terminates here; a zero leading
      // coefficient with a nonzero remainder is a genuine breakdown
      bool rest_zero = true;
      for (const auto& v : shifted)
        if (!v.is_zero()) {
          rest_zero = false;
          break;
        }
      if (rest_zero) break;
      throw CfBreakdownError(level);
    }
    cf.numerators.push_back(c);
    for (auto& v : shifted) v /= c;  // T_{k+1}, constant term 1
    prev = std::move(cur);
    cur = std::move(shifted);
  }
  return cf;
}

EulerCF hypergeometric_cf(const Rational& p, const Rational& q, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("hypergeometric_cf: depth must be >= 1");
  EulerCF cf;
  cf.leading = 1;
  cf.power = 1;
  cf.numerators.reserve(depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    std::size_t t = (i + 1) / 2;
    if (i % 2 == 1)
      cf.numerators.push_back(p + Rational(static_cast<std::int64_t>(t - 1)) * q);
    else
      cf.numerators.push_back(Rational(static_cast<std::int64_t>(t)) * q);
  }
  return cf;
}

std::vector<Rational> ode_cf_numerators(const Rational& f, const Rational& a, const Rational& b,
                                        const Rational& c, const Rational& m, const Rational& n,
                                        std::size_t depth) {
  if (b.is_zero()) throw std::domain_error("ode_cf_numerators: b must be nonzero");
  std::vector<Rational> out;
  out.reserve(depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    Rational t(static_cast<std::int64_t>((i + 1) / 2));
    Rational bracket;
    if (i % 2 == 1)
      bracket = (t * m - (t - Rational(1)) * n + a) * b + c * f;
    else
      bracket = (t * m - t * n) * b + c * f;
    out.push_back(bracket / b);
  }
  return out;
}

namespace {

BigInt require_integer(const Rational& r, const char* what) {
  if (!r.is_integer()) throw std::invalid_argument(std::string(what) + ": non-integer value");
  return r.num();
}

// Partial numerator list [leading*x^lp, c_1*x^p, c_2*x^p, ...] at the point x.
std::vector<Rational> numerators_at(const EulerCF& cf, const Rational& x, std::size_t count) {
  if (count > cf.numerators.size() + 1)
    throw std::out_of_range("continued fraction: not enough numerators");
  std::vector<Rational> out;
  out.reserve(count);
  Rational xl = x.pow(cf.leading_power);
  Rational xp = x.pow(cf.power);
  if (count > 0) out.push_back(cf.leading * xl);
  for (std::size_t i = 1; i < count; ++i) out.push_back(cf.numerators[i - 1] * xp);
  return out;
}

}  // namespace

std::vector<ConvergentPair> convergents(const EulerCF& cf, const Rational& x, std::size_t count) {
  std::vector<Rational> nums = numerators_at(cf, x, count == 0 ? 0 : count - 1);
  std::vector<ConvergentPair> out;
  out.reserve(count);
  BigInt h_prev(1), h(0);  // h_{-1} = 1, h_0 = 0
  BigInt k_prev(0), k(1);  // k_{-1} = 0, k_0 = 1
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (idx > 0) {
      BigInt a = require_integer(nums[idx - 1], "convergents");
      BigInt h_next = h + a * h_prev;
      BigInt k_next = k + a * k_prev;
      h_prev = h;
      h = h_next;
      k_prev = k;
      k = k_next;
    }
    ConvergentPair cp;
    cp.p = h;
    cp.q = k;
    cp.index = idx;
    cp.side = (idx % 2 == 0) ? ConvergentPair::Side::kLower : ConvergentPair::Side::kUpper;
    out.push_back(std::move(cp));
  }
  return out;
}

std::vector<std::vector<BigFloat>> interleave_means(const std::vector<BigFloat>& values,
                                                    std::size_t rounds) {
  std::vector<std::vector<BigFloat>> out;
  out.push_back(values);
  for (std::size_t r = 0; r < rounds && out.back().size() > 1; ++r) {
    const auto& prev = out.back();
    std::vector<BigFloat> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back((prev[i] + prev[i + 1]).halved());
    out.push_back(std::move(next));
  }
  return out;
}

BigFloat tail_quadratic(const Rational& a, int digits) {
  if (a.is_negative()) throw std::domain_error("tail_quadratic: a must be >= 0");
  if (a.is_zero()) return BigFloat();
  BigFloat rad = BigFloat::sqrt(BigFloat::from_rational(Rational(4) * a + Rational(1), digits + 8),
                                digits + 4);
  return BigFloat::div(rad - BigFloat(1), BigFloat(2), digits);
}

namespace {

// Bracketed bisection to ~2 digits then Newton to the digit budget, for a
// cubic with ascending coefficients poly[0..3] and a positive root.
BigFloat solve_cubic(const std::vector<Rational>& poly, int digits) {
  auto eval = [&](const Rational& s) {
    return ((poly[3] * s + poly[2]) * s + poly[1]) * s + poly[0];
  };
  Rational lo = 0, hi = 1;
  int doublings = 0;
  while (eval(hi).signum() < 0) {
    hi *= Rational(2);
    if (++doublings > 128) throw std::runtime_error("tail_cubic: no sign change in bracket");
  }
  if (eval(lo).signum() > 0) throw std::runtime_error("tail_cubic: no sign change in bracket");
  // bisect until the bracket is ~1/100 wide
  while ((hi - lo) * Rational(100) > Rational(1)) {
    Rational mid = (lo + hi) / Rational(2);
    if (eval(mid).signum() < 0)
      lo = mid;
    else
      hi = mid;
  }
  int work = digits + 8;
  BigFloat s = BigFloat::from_rational((lo + hi) / Rational(2), work);
  BigFloat c0 = BigFloat::from_rational(poly[0], work);
  BigFloat c1 = BigFloat::from_rational(poly[1], work);
  BigFloat c2 = BigFloat::from_rational(poly[2], work);
  BigFloat c3 = BigFloat::from_rational(poly[3], work);
  for (int it = 0; it < 64; ++it) {
    BigFloat f = ((c3 * s + c2) * s + c1) * s + c0;
    BigFloat fp = (BigFloat(3) * c3 * s + BigFloat(2) * c2) * s + c1;
    BigFloat step = BigFloat::div(f, fp, work);
    s = (s - step).rounded(work);
    if (step.is_zero() || step.abs().exponent10() +
            static_cast<std::int64_t>(step.abs().mantissa().digit_count()) < -(digits + 2))
      break;
  }
  return s.rounded(digits);
}

}  // namespace

TailClosure tail_cubic(const Rational& a, int digits) {
  if (a < Rational(2)) throw std::domain_error("tail_cubic: requires a >= 2");
  TailClosure tc;
  tc.a = a;
  tc.polynomial = {-a, -(Rational(2) * a - Rational(1)), Rational(2), Rational(2)};
  tc.s = solve_cubic(tc.polynomial, digits);
  BigFloat af = BigFloat::from_rational(a, digits + 6);
  BigFloat a1 = BigFloat::from_rational(a - Rational(1), digits + 6);
  tc.r = BigFloat::div(a1 * (tc.s + BigFloat(1)), tc.s + af, digits);
  return tc;
}

TailClosure tail_cubic_stepped(const Rational& n0, int digits) {
  if (n0 < Rational(1)) throw std::domain_error("tail_cubic_stepped: requires n0 >= 1");
  TailClosure tc;
  tc.a = n0;
  // 2q^3 + 3q^2 - 2 n0 q - (n0 + 1) = 0
  tc.polynomial = {-(n0 + Rational(1)), -(Rational(2) * n0), Rational(3), Rational(2)};
  tc.s = solve_cubic(tc.polynomial, digits);
  BigFloat n0f = BigFloat::from_rational(n0, digits + 6);
  tc.r = BigFloat::div(n0f, tc.s + BigFloat(1), digits);  // p = n0/(1+q)
  return tc;
}

TailComposition compose_tail(const EulerCF& cf, const Rational& x,
                             const std::vector<std::size_t>& cut_indices,
                             const BigFloat& tail_value, int digits) {
  if (cut_indices.empty()) throw std::invalid_argument("compose_tail: need at least one cut");
  std::size_t total = cut_indices.back();
  std::vector<Rational> nums = numerators_at(cf, x, total);

  TailComposition out;
  std::size_t begin = 0;
  for (std::size_t cut : cut_indices) {
    if (cut < begin) throw std::invalid_argument("compose_tail: cuts must be non-decreasing");
    // block covers numerators [begin, cut)
    BigInt h_prev(1), h(0), k_prev(0), k(1);
    for (std::size_t i = begin; i < cut; ++i) {
      const Rational& ar = nums[i];
      if (ar.is_integer()) {
        BigInt a = ar.num();
        BigInt h_next = h + a * h_prev;
        BigInt k_next = k + a * k_prev;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
      } else {
        // clear the denominator through the recurrence row; the map is only
        // defined up to a scalar, so integrality is preserved
        BigInt a = ar.num();
        BigInt d = ar.den();
        BigInt h_next = d * h + a * h_prev;
        BigInt k_next = d * k + a * k_prev;
        h_prev = d * h; h = h_next;
        k_prev = d * k; k = k_next;
      }
    }
    LinearFractionalMap m{h, h_prev, k, k_prev};
    if (begin == cut) m = LinearFractionalMap::identity();
    if (m.determinant().is_zero())
      throw std::runtime_error("compose_tail: degenerate block map (determinant 0)");
    out.blocks.push_back(m);
    begin = cut;
  }

  BigFloat v = tail_value;
  for (auto it = out.blocks.rbegin(); it != out.blocks.rend(); ++it)
    v = it->apply(v, digits + 6);
  out.value = v.rounded(digits);
  return out;
}

BigFloat sum_by_cf_closure(const SeriesSpec& spec, std::size_t depth, int digits) {
  if (depth < 6) throw std::invalid_argument("sum_by_cf_closure: depth too small");
  const Rational& x = spec.point_x;
  switch (spec.family) {
    case SeriesFamily::kFactorial: {
      // numerators 1; 1,1,2,2,3,3,...; close at an even pair boundary so the
      // tail reads a-1, a-1, a, a with a = the next pair value + 1
      std::size_t n = depth | 1;  // odd count => leading + even number of pairs
      EulerCF cf = hypergeometric_cf(1, 1, n - 1);
      std::size_t next_pair = (n + 1) / 2;      // value of numerator n
      Rational a(static_cast<std::int64_t>(next_pair + 1));
      TailClosure tc = tail_cubic(a, digits + 6);
      Rational x_pow = x.pow(cf.power);
      BigFloat tail = (tc.r * BigFloat::from_rational(x_pow, digits + 6)).rounded(digits + 6);
      return compose_tail(cf, x, {n}, tail, digits).value;
    }
    case SeriesFamily::kOddDoubleFactorial: {
      // z = x/(1 + 1x^2/(1 + 2x^2/(1 + ...))): single-step numerators
      EulerCF cf;
      cf.leading = 1;
      cf.leading_power = 1;
      cf.power = 2;
      for (std::size_t i = 1; i < depth; ++i)
        cf.numerators.push_back(Rational(static_cast<std::int64_t>(i)));
      Rational n0(static_cast<std::int64_t>(depth));
      TailClosure tc = tail_cubic_stepped(n0, digits + 6);
      Rational x_pow = x.pow(cf.power);
      BigFloat tail = (tc.r * BigFloat::from_rational(x_pow, digits + 6)).rounded(digits + 6);
      return compose_tail(cf, x, {depth}, tail, digits).value;
    }
    case SeriesFamily::kHypergeometric: {
      EulerCF cf = hypergeometric_cf(spec.p, spec.q, depth - 1);
      Rational next = (depth % 2 == 1)
                          ? spec.p + Rational(static_cast<std::int64_t>((depth + 1) / 2 - 1)) * spec.q
                          : Rational(static_cast<std::int64_t>((depth + 1) / 2)) * spec.q;
      BigFloat tail = tail_quadratic(next * x.pow(cf.power), digits + 6);
      return compose_tail(cf, x, {depth}, tail, digits).value;
    }
    default:
      throw std::invalid_argument("sum_by_cf_closure: unsupported family");
  }
}

RegularCF real_to_regular_cf(const BigFloat& value, std::size_t max_quotients) {
  if (value.signum() <= 0) throw std::domain_error("real_to_regular_cf: value must be positive");
  RegularCF out;
  Rational x = value.to_rational();
  // the given decimal is exact only to its last digit
  bool has_ulp = value.exponent10() < 0;
  Rational ulp = has_ulp
                     ? Rational(BigInt(1), BigInt::pow10(static_cast<std::size_t>(-value.exponent10())))
                     : Rational(0);
  BigInt k_prev(0), k_cur(1);  // denominators k_{-1}, k_0
  for (std::size_t i = 0; i < max_quotients; ++i) {
    if (i > 0 && has_ulp) {
      // a quotient read from a remainder magnified by k_cur^2 ulps of input
      // uncertainty is no longer the value's own; stop rather than fabricate
      if (Rational(k_cur * k_cur, BigInt(1)) * ulp * Rational(2) >= Rational(1)) {
        out.truncated_by_precision = true;
        break;
      }
    }
    BigInt quot, rem;
    BigInt::divmod(x.num(), x.den(), quot, rem);
    if (x.is_negative() && !rem.is_zero()) quot = quot - BigInt(1);
    out.quotients.push_back(quot);
    if (i > 0) {
      BigInt k_next = quot * k_cur + k_prev;
      k_prev = k_cur;
      k_cur = k_next;
    }
    Rational frac = x - Rational(quot, BigInt(1));
    if (frac.is_zero()) break;
    x = frac.reciprocal();
  }
  return out;
}

std::vector<ConvergentPair> regular_convergents(const RegularCF& cf) {
  std::vector<ConvergentPair> out;
  out.reserve(cf.quotients.size());
  BigInt h_prev2(0), h_prev(1);  // h_{-2}, h_{-1}
  BigInt k_prev2(1), k_prev(0);
  for (const BigInt& a : cf.quotients) {
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    ConvergentPair cp;
    cp.p = h;
    cp.q = k;
    cp.index = out.size();
    cp.side = (out.size() % 2 == 0) ? ConvergentPair::Side::kLower : ConvergentPair::Side::kUpper;
    out.push_back(std::move(cp));
  }
  return out;
}

namespace {

// Truncated power-series helpers over Rational coefficients (index = power).
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t order) {
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1/(1 + s) for a series s with zero constant term
std::vector<Rational> series_inv_one_plus(const std::vector<Rational>& s, std::size_t order) {
  std::vector<Rational> inv(order + 1, Rational(0));
  inv[0] = 1;
  // inv = 1 - s + s^2 - ... computed by the recurrence inv = 1 - s*inv
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n && j < s.size(); ++j) acc += s[j] * inv[n - j];
    inv[n] = -acc;
  }
  return inv;
}

}  // namespace

std::vector<Rational> expand_to_series(const EulerCF& cf, std::size_t order) {
  // innermost-out: tail = 0; level k gives c_k x^p * inverse(1 + tail)
  std::vector<Rational> tail(order + 1, Rational(0));
  for (std::size_t k = cf.numerators.size(); k-- > 0;) {
    std::vector<Rational> inv = series_inv_one_plus(tail, order);
    std::vector<Rational> next(order + 1, Rational(0));
    std::size_t shift = static_cast<std::size_t>(cf.power);
    for (std::size_t i = 0; i + shift <= order; ++i) next[i + shift] = cf.numerators[k] * inv[i];
    tail = std::move(next);
  }
  std::vector<Rational> inv = series_inv_one_plus(tail, order);
  std::vector<Rational> out(order + 1, Rational(0));
  std::size_t lshift = static_cast<std::size_t>(cf.leading_power);
  for (std::size_t i = 0; i + lshift <= order; ++i) out[i + lshift] = cf.leading * inv[i];
  return out;
}

}  // namespace summa
