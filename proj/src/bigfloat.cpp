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

#include "summa/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace summa {

namespace {

// Divide BigInt a by b producing a quotient rounded half away from zero.
BigInt div_rounded(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  if ((r + r).abs() >= b.abs()) q = q + BigInt(a.signum() * b.signum());
  return q;
}

}  // namespace

void BigFloat::normalize() {
  if (mant_.is_zero()) {
    exp_ = 0;
    return;
  }
  BigInt ten(10);
  while (true) {
    BigInt q, r;
    BigInt::divmod(mant_, ten, q, r);
    if (!r.is_zero()) break;
    mant_ = q;
    ++exp_;
  }
}

BigFloat::BigFloat(BigInt mant, std::int64_t exp10) : mant_(std::move(mant)), exp_(exp10) {
  normalize();
}

BigFloat::BigFloat(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos) {
    mant_ = BigInt(s);
    exp_ = 0;
  } else {
    std::string digits(s.substr(0, dot));
    std::string_view frac = s.substr(dot + 1);
    digits += frac;
    mant_ = BigInt(digits);
    exp_ = -static_cast<std::int64_t>(frac.size());
  }
  normalize();
}

BigFloat BigFloat::from_rational(const Rational& r, int digits) {
  if (r.is_zero()) return BigFloat();
  std::int64_t nd = static_cast<std::int64_t>(r.num().digit_count());
  std::int64_t dd = static_cast<std::int64_t>(r.den().digit_count());
  std::int64_t shift = digits + dd - nd + 1;
  if (shift < 0) shift = 0;
  BigInt scaled = r.num() * BigInt::pow10(static_cast<std::size_t>(shift));
  BigFloat out(div_rounded(scaled, r.den()), -shift);
  return out.rounded(digits);
}

BigFloat BigFloat::abs() const {
  BigFloat r = *this;
  r.mant_ = r.mant_.abs();
  return r;
}

BigFloat BigFloat::negated() const {
  BigFloat r = *this;
  r.mant_ = r.mant_.negated();
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.exp_, b.exp_);
  BigInt ma = a.mant_ * BigInt::pow10(static_cast<std::size_t>(a.exp_ - e));
  BigInt mb = b.mant_ * BigInt::pow10(static_cast<std::size_t>(b.exp_ - e));
  return BigFloat(ma + mb, e);
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + b.negated(); }

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  return BigFloat(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

BigFloat BigFloat::halved() const { return BigFloat(mant_ * BigInt(5), exp_ - 1); }

BigFloat BigFloat::div(const BigFloat& a, const BigFloat& b, int digits) {
  if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
  if (a.is_zero()) return BigFloat();
  std::int64_t nd = static_cast<std::int64_t>(a.mant_.digit_count());
  std::int64_t dd = static_cast<std::int64_t>(b.mant_.digit_count());
  std::int64_t shift = digits + dd - nd + 2;
  if (shift < 0) shift = 0;
  BigInt scaled = a.mant_ * BigInt::pow10(static_cast<std::size_t>(shift));
  BigFloat out(div_rounded(scaled, b.mant_), a.exp_ - b.exp_ - shift);
  return out.rounded(digits);
}

std::int64_t BigFloat::top_exponent() const {
  return exp_ + static_cast<std::int64_t>(mant_.digit_count()) - 1;
}

BigFloat BigFloat::rounded(int digits) const {
  if (mant_.is_zero()) return *this;
  std::int64_t nd = static_cast<std::int64_t>(mant_.digit_count());
  std::int64_t drop = nd - digits;
  if (drop <= 0) return *this;
  BigInt scale = BigInt::pow10(static_cast<std::size_t>(drop));
  return BigFloat(div_rounded(mant_, scale), exp_ + drop);
}

BigFloat BigFloat::rounded_at(int decimals) const {
  if (mant_.is_zero()) return *this;
  std::int64_t drop = -static_cast<std::int64_t>(decimals) - exp_;
  if (drop <= 0) return *this;
  BigInt scale = BigInt::pow10(static_cast<std::size_t>(drop));
  return BigFloat(div_rounded(mant_, scale), exp_ + drop);
}

int BigFloat::compare(const BigFloat& a, const BigFloat& b) {
  if (a.mant_.signum() != b.mant_.signum())
    return a.mant_.signum() < b.mant_.signum() ? -1 : 1;
  return (a - b).signum();
}

Rational BigFloat::to_rational() const {
  if (exp_ >= 0) return Rational(mant_ * BigInt::pow10(static_cast<std::size_t>(exp_)), BigInt(1));
  return Rational(mant_, BigInt::pow10(static_cast<std::size_t>(-exp_)));
}

BigInt BigFloat::floor_to_bigint() const {
  if (exp_ >= 0) return mant_ * BigInt::pow10(static_cast<std::size_t>(exp_));
  BigInt q, r;
  BigInt::divmod(mant_, BigInt::pow10(static_cast<std::size_t>(-exp_)), q, r);
  if (mant_.is_negative() && !r.is_zero()) q = q - BigInt(1);
  return q;
}

double BigFloat::to_double_approx() const {
  if (mant_.is_zero()) return 0.0;
  std::string digits = mant_.abs().to_string();
  std::size_t take = std::min<std::size_t>(digits.size(), 17);
  double head = std::strtod(digits.substr(0, take).c_str(), nullptr);
  double scale = static_cast<double>(exp_ + static_cast<std::int64_t>(digits.size() - take));
  double val = head * std::pow(10.0, scale);
  return mant_.is_negative() ? -val : val;
}

std::string BigFloat::to_string() const {
  if (mant_.is_zero()) return "0";
  std::string digits = mant_.abs().to_string();
  std::string sign = mant_.is_negative() ? "-" : "";
  std::int64_t point = static_cast<std::int64_t>(digits.size()) + exp_;
  if (exp_ >= 0) {
    if (point <= 40) return sign + digits + std::string(static_cast<std::size_t>(exp_), '0');
  } else if (point > 0) {
    return sign + digits.substr(0, static_cast<std::size_t>(point)) + "." +
           digits.substr(static_cast<std::size_t>(point));
  } else if (point > -40) {
    return sign + "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  }
  // extreme magnitudes: d.dddd e+NN
  std::string out = sign + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(top_exponent());
  return out;
}

std::string BigFloat::to_fixed(int decimals) const {
  BigFloat r = rounded_at(decimals);
  BigInt scaled = r.mant_;
  std::int64_t shift = static_cast<std::int64_t>(decimals) + r.exp_;
  if (shift > 0) scaled = scaled * BigInt::pow10(static_cast<std::size_t>(shift));
  std::string digits = scaled.abs().to_string();
  if (digits.size() <= static_cast<std::size_t>(decimals))
    digits = std::string(static_cast<std::size_t>(decimals) + 1 - digits.size(), '0') + digits;
  std::string sign = scaled.is_negative() ? "-" : "";
  if (decimals == 0) return sign + digits;
  return sign + digits.substr(0, digits.size() - static_cast<std::size_t>(decimals)) + "." +
         digits.substr(digits.size() - static_cast<std::size_t>(decimals));
}

BigFloat BigFloat::sqrt(const BigFloat& x, int digits) {
  if (x.is_negative()) throw std::domain_error("BigFloat: sqrt of negative");
  if (x.is_zero()) return BigFloat();
  int work = digits + 6;
  double d = x.to_double_approx();
  BigFloat y;
  if (d > 0 && std::isfinite(d)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15e", std::sqrt(d));
    std::string s(buf);
    auto epos = s.find('e');
    BigFloat head(std::string_view(s.substr(0, epos)));
    int ex = std::atoi(s.c_str() + epos + 1);
    y = head;
    if (ex >= 0)
      y = y * BigFloat(BigInt::pow10(static_cast<std::size_t>(ex)), 0);
    else
      y = div(y, BigFloat(BigInt::pow10(static_cast<std::size_t>(-ex)), 0), 20);
  } else {
    // seed from the exponent alone
    y = BigFloat(BigInt(1), x.top_exponent() / 2);
  }
  // Newton: y <- (y + x/y)/2, doubling correct digits each pass
  int correct = 12;
  while (correct < work + 4) {
    int p = std::min(work + 4, 2 * correct);
    y = (y + div(x, y, p)).halved().rounded(p);
    correct = 2 * correct - 2;
  }
  return y.rounded(digits);
}

BigFloat BigFloat::exp(const BigFloat& x, int digits) {
  if (x.is_zero()) return BigFloat(1);
  // halve until |x| < 1/2, Taylor, then square back
  int halvings = 0;
  BigFloat t = x;
  BigFloat half("0.5");
  while (t.abs() >= half) {
    t = t.halved();
    ++halvings;
    if (halvings > 64) throw std::domain_error("BigFloat: exp argument too large");
  }
  int work = digits + halvings + 10;
  BigFloat sum(1);
  BigFloat term(1);
  for (int n = 1;; ++n) {
    term = div(term * t, BigFloat(n), work);
    sum += term;
    sum = sum.rounded(work + 4);
    if (term.is_zero() || term.abs().top_exponent() < -(work + 2)) break;
  }
  for (int i = 0; i < halvings; ++i) sum = (sum * sum).rounded(work);
  return sum.rounded(digits);
}

BigFloat BigFloat::ln(const BigFloat& x, int digits) {
  if (x.signum() <= 0) throw std::domain_error("BigFloat: ln of non-positive");
  int work = digits + 8;
  // seed: x = m * 10^k with 1 <= m < 10
  std::string mdig = x.mant_.abs().to_string();
  std::size_t take = std::min<std::size_t>(mdig.size(), 17);
  double m = std::strtod(mdig.substr(0, take).c_str(), nullptr);
  m /= std::pow(10.0, static_cast<double>(take - 1));
  std::int64_t k = x.top_exponent();
  double seed = std::log(m) + 2.302585092994045684 * static_cast<double>(k);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15e", seed);
  std::string s(buf);
  auto epos = s.find('e');
  BigFloat y(std::string_view(s.substr(0, epos)));
  int ex = std::atoi(s.c_str() + epos + 1);
  if (ex >= 0)
    y = y * BigFloat(BigInt::pow10(static_cast<std::size_t>(ex)), 0);
  else
    y = div(y, BigFloat(BigInt::pow10(static_cast<std::size_t>(-ex)), 0), 20);
  // Newton on f(y) = e^y - x: y <- y + x*e^(-y) - 1
  int correct = 12;
  while (correct < work + 4) {
    int p = std::min(work + 4, 2 * correct + 4);
    BigFloat delta = (x * exp(y.negated(), p)).rounded(p) - BigFloat(1);
    y = (y + delta).rounded(p);
    correct = 2 * correct - 2;
  }
  return y.rounded(digits);
}

BigFloat BigFloat::log10(const BigFloat& x, int digits) {
  return div(ln(x, digits + 4), ln10(digits + 4), digits);
}

BigFloat BigFloat::pow10(const BigFloat& x, int digits) {
  if (x.is_zero()) return BigFloat(1);
  if (x.exp_ >= 0 && x.mant_.fits_int64()) {
    std::int64_t n = x.to_rational().num().fits_int64() ? x.to_rational().num().to_int64() : 0;
    if (x.to_rational().is_integer() && n >= 0 && n < 1000000)
      return BigFloat(BigInt::pow10(static_cast<std::size_t>(n)), 0);
    if (x.to_rational().is_integer() && n < 0 && n > -1000000)
      return BigFloat(BigInt(1), n);
  }
  return exp((x * ln10(digits + 8)).rounded(digits + 8), digits);
}

namespace {

std::mutex g_const_mutex;
std::map<int, BigFloat> g_e_cache;
std::map<int, BigFloat> g_pi_cache;
std::map<int, BigFloat> g_ln10_cache;

Rational atan_reciprocal(std::int64_t x, int digits) {
  // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)), exact rational partial sum
  Rational sum = 0;
  Rational xr(1, x);
  Rational power = xr;
  Rational x2 = xr * xr;
  // terms shrink by x^2 each step
  double per_term = 2.0 * std::log10(static_cast<double>(x));
  int terms = static_cast<int>(static_cast<double>(digits + 4) / per_term) + 2;
  for (int k = 0; k < terms; ++k) {
    Rational term = power / Rational(2 * k + 1);
    sum += (k % 2 == 0) ? term : -term;
    power *= x2;
  }
  return sum;
}

}  // namespace

BigFloat BigFloat::e(int digits) {
  std::lock_guard<std::mutex> lock(g_const_mutex);
  auto it = g_e_cache.lower_bound(digits);
  if (it != g_e_cache.end()) return it->second.rounded(digits);
  Rational sum = 0;
  Rational term = 1;
  int k = 0;
  // k! passes 10^(digits+4) quickly
  while (true) {
    sum += term;
    ++k;
    term /= Rational(k);
    if (term.den().digit_count() > static_cast<std::size_t>(digits) + 6) break;
  }
  BigFloat out = from_rational(sum, digits + 2);
  g_e_cache[digits] = out;
  return out.rounded(digits);
}

BigFloat BigFloat::pi(int digits) {
  std::lock_guard<std::mutex> lock(g_const_mutex);
  auto it = g_pi_cache.lower_bound(digits);
  if (it != g_pi_cache.end()) return it->second.rounded(digits);
  Rational machin = Rational(16) * atan_reciprocal(5, digits + 4) -
                    Rational(4) * atan_reciprocal(239, digits + 4);
  BigFloat out = from_rational(machin, digits + 2);
  g_pi_cache[digits] = out;
  return out.rounded(digits);
}

BigFloat BigFloat::ln10(int digits) {
  {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    auto it = g_ln10_cache.lower_bound(digits);
    if (it != g_ln10_cache.end()) return it->second.rounded(digits);
  }
  BigFloat out = ln(BigFloat(10), digits + 2);
  std::lock_guard<std::mutex> lock(g_const_mutex);
  g_ln10_cache[digits] = out;
  return out.rounded(digits);
}

int working_precision() {
  static int cached = [] {
    const char* env = std::getenv("SUMMA_PRECISION");
    if (env != nullptr) {
      int v = std::atoi(env);
      if (v >= 8 && v <= 10000) return v;
    }
    return 50;
  }();
  return cached;
}

}  // namespace summa
