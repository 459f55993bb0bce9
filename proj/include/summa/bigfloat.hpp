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

#ifndef SUMMA_BIGFLOAT_HPP
#define SUMMA_BIGFLOAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "summa/bigint.hpp"
#include "summa/rational.hpp"

namespace summa {

// Arbitrary-precision decimal value: mantissa * 10^exponent. Addition,
// subtraction and multiplication are exact; division, roots and the
// elementary functions take an explicit decimal digit budget. A decimal
// mantissa means every printed table entry (7-digit logs, 8-digit ordinates,
// 10-digit convergents) is representable exactly.
class BigFloat {
 public:
  BigFloat() = default;
  BigFloat(std::int64_t v) : mant_(v) {}  // NOLINT: implicit by design
  BigFloat(BigInt mant, std::int64_t exp10);
  explicit BigFloat(std::string_view decimal_literal);  // exact, e.g. "0.3010300"

  static BigFloat from_rational(const Rational& r, int digits);

  bool is_zero() const { return mant_.is_zero(); }
  bool is_negative() const { return mant_.is_negative(); }
  int signum() const { return mant_.signum(); }

  const BigInt& mantissa() const { return mant_; }
  std::int64_t exponent10() const { return exp_; }

  BigFloat abs() const;
  BigFloat negated() const;
  BigFloat operator-() const { return negated(); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
  BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
  BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

  BigFloat halved() const;  // exact: *5, exponent-1

  static BigFloat div(const BigFloat& a, const BigFloat& b, int digits);

  // Round to `digits` significant decimal digits, half away from zero.
  BigFloat rounded(int digits) const;
  // Round to a multiple of 10^-decimals, half away from zero.
  BigFloat rounded_at(int decimals) const;

  static int compare(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

  // Every BigFloat is exactly mant * 10^exp, hence rational.
  Rational to_rational() const;
  BigInt floor_to_bigint() const;  // toward -infinity
  double to_double_approx() const;

  // Plain positional rendering of the exact value.
  std::string to_string() const;
  // Fixed-point rendering with `decimals` digits after the point, half-up.
  std::string to_fixed(int decimals) const;

  // --- elementary functions, `digits` = requested correct decimals ---
  static BigFloat sqrt(const BigFloat& x, int digits);   // x >= 0
  static BigFloat exp(const BigFloat& x, int digits);
  static BigFloat ln(const BigFloat& x, int digits);     // x > 0
  static BigFloat log10(const BigFloat& x, int digits);  // x > 0
  static BigFloat pow10(const BigFloat& x, int digits);  // 10^x

  // --- cached constants ---
  static BigFloat e(int digits);
  static BigFloat pi(int digits);
  static BigFloat ln10(int digits);

 private:
  BigInt mant_;
  std::int64_t exp_ = 0;
  void normalize();  // strip trailing mantissa zeros into the exponent
  std::int64_t top_exponent() const;  // exponent of the leading digit
};

// Working precision in decimal digits; reads SUMMA_PRECISION once (default 50).
int working_precision();

}  // namespace summa

#endif  // SUMMA_BIGFLOAT_HPP
