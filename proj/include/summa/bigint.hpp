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

#ifndef SUMMA_BIGINT_HPP
#define SUMMA_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace summa {

// Arbitrary-precision signed integer, sign-magnitude with base-10^9 limbs.
// The decimal limb base keeps conversions to and from decimal strings exact,
// which everything downstream (fixed-point tables, digit budgets) relies on.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by design, mirrors int literals
  explicit BigInt(std::string_view decimal);

  static BigInt pow10(std::size_t n);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int signum() const { return sign_; }

  BigInt abs() const;
  BigInt negated() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }
  BigInt operator-() const { return negated(); }

  // Truncated division (quotient rounded toward zero). b must be nonzero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);

  // -1, 0, +1
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  std::size_t digit_count() const;          // decimal digits of |x|, 1 for zero
  bool fits_int64() const;
  std::int64_t to_int64() const;            // precondition: fits_int64()
  double to_double_approx() const;          // may overflow to +-inf for huge values
  std::string to_string() const;

 private:
  static constexpr std::uint32_t kBase = 1000000000u;
  static constexpr int kBaseDigits = 9;

  int sign_ = 0;                            // -1, 0, +1
  std::vector<std::uint32_t> limbs_;        // little-endian, no leading zeros

  void trim();
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  // precondition: |a| >= |b|
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
};

}  // namespace summa

#endif  // SUMMA_BIGINT_HPP
