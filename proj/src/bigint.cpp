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

#include "summa/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace summa {

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt::BigInt(std::int64_t v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  std::uint64_t m = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
    m /= kBase;
  }
}

BigInt::BigInt(std::string_view s) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    sign = s[pos] == '-' ? -1 : 1;
    ++pos;
  }
  if (pos == s.size()) throw std::invalid_argument("BigInt: empty literal");
  for (std::size_t i = pos; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
  for (std::size_t end = s.size(); end > pos;) {
    std::size_t begin = end >= pos + kBaseDigits ? end - kBaseDigits : pos;
    std::uint32_t limb = 0;
    for (std::size_t i = begin; i < end; ++i) limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
    limbs_.push_back(limb);
    end = begin;
  }
  sign_ = sign;
  trim();
}

BigInt BigInt::pow10(std::size_t n) {
  BigInt r;
  r.sign_ = 1;
  r.limbs_.assign(n / kBaseDigits, 0);
  std::uint32_t head = 1;
  for (std::size_t i = 0; i < n % kBaseDigits; ++i) head *= 10;
  r.limbs_.push_back(head);
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::negated() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int m = compare_magnitude(a, b);
  return a.sign_ >= 0 ? m : -m;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<std::uint32_t>(s % kBase);
    carry = static_cast<std::uint32_t>(s / kBase);
  }
  return r;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
  } else {
    int m = BigInt::compare_magnitude(a, b);
    if (m == 0) return BigInt();
    const BigInt& big = m > 0 ? a : b;
    const BigInt& small = m > 0 ? b : a;
    r.sign_ = big.sign_;
    r.limbs_ = BigInt::sub_magnitude(big.limbs_, small.limbs_);
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size() || carry != 0; ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry;
      if (j < b.limbs_.size())
        cur += static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur % BigInt::kBase);
      carry = cur / BigInt::kBase;
    }
  }
  r.trim();
  return r;
}

// Schoolbook long division over base-10^9 limbs with a 128-bit trial digit.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  if (compare_magnitude(a, b) < 0) {
    q = BigInt();
    r = a;
    return;
  }
  if (b.limbs_.size() == 1) {
    std::uint32_t d = b.limbs_[0];
    BigInt quo;
    quo.limbs_.assign(a.limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      std::uint64_t cur = rem * kBase + a.limbs_[i];
      quo.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    quo.sign_ = a.sign_ * b.sign_;
    quo.trim();
    q = quo;
    r = BigInt(static_cast<std::int64_t>(rem));
    r.sign_ = r.is_zero() ? 0 : a.sign_;
    return;
  }

  // Magnitude-only division of u by v, one quotient limb per position.
  std::vector<std::uint32_t> u = a.limbs_;
  const std::vector<std::uint32_t>& v = b.limbs_;
  std::size_t n = v.size();
  std::size_t m = u.size() - n;
  BigInt quo;
  quo.limbs_.assign(m + 1, 0);

  auto mag_ge_shifted = [&](std::size_t shift) {
    // u >= v * base^shift ?
    std::size_t usz = u.size();
    while (usz > 0 && u[usz - 1] == 0) --usz;
    if (usz > n + shift) return true;
    if (usz < n + shift) return false;
    for (std::size_t i = usz; i-- > shift;) {
      std::uint32_t vi = v[i - shift];
      if (u[i] != vi) return u[i] > vi;
    }
    return true;
  };
  auto sub_mul_shifted = [&](std::uint64_t f, std::size_t shift) {
    // u -= v * f * base^shift; caller guarantees no underflow
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; (i < n || carry != 0 || borrow != 0) && shift + i < u.size(); ++i) {
      std::uint64_t prod = carry;
      if (i < n) prod += v[i] * f;
      carry = prod / kBase;
      std::int64_t s = static_cast<std::int64_t>(u[shift + i]) - borrow -
                       static_cast<std::int64_t>(prod % kBase);
      if (s < 0) {
        s += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[shift + i] = static_cast<std::uint32_t>(s);
    }
  };

  for (std::size_t j = m + 1; j-- > 0;) {
    // Underestimating trial digit: top limbs of the window over (den + 1).
    unsigned __int128 num = 0;
    std::size_t hi = std::min(u.size(), j + n + 1);
    for (std::size_t i = hi; i-- > j + n - 2;) num = num * kBase + u[i];
    unsigned __int128 den = static_cast<unsigned __int128>(v[n - 1]) * kBase + v[n - 2];
    std::uint64_t qd = static_cast<std::uint64_t>(num / (den + 1));
    if (qd >= kBase) qd = kBase - 1;
    if (qd > 0) sub_mul_shifted(qd, j);
    while (mag_ge_shifted(j)) {
      ++qd;
      sub_mul_shifted(1, j);
    }
    quo.limbs_[j] = static_cast<std::uint32_t>(qd);
  }

  quo.sign_ = 1;
  quo.trim();
  quo.sign_ = quo.is_zero() ? 0 : a.sign_ * b.sign_;
  BigInt rem;
  rem.limbs_ = u;
  rem.sign_ = 1;
  rem.trim();
  rem.sign_ = rem.is_zero() ? 0 : a.sign_;
  q = quo;
  r = rem;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

std::size_t BigInt::digit_count() const {
  if (sign_ == 0) return 1;
  std::size_t d = (limbs_.size() - 1) * kBaseDigits;
  std::uint32_t top = limbs_.back();
  while (top != 0) {
    ++d;
    top /= 10;
  }
  return d;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 3) return false;
  unsigned __int128 m = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) m = m * kBase + limbs_[i];
  unsigned __int128 lim = static_cast<unsigned __int128>(INT64_MAX) + (sign_ < 0 ? 1 : 0);
  return m <= lim;
}

std::int64_t BigInt::to_int64() const {
  unsigned __int128 m = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) m = m * kBase + limbs_[i];
  return sign_ < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

double BigInt::to_double_approx() const {
  double r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) r = r * kBase + limbs_[i];
  return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string s = sign_ < 0 ? "-" : "";
  s += std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(kBaseDigits - part.size(), '0') + part;
  }
  return s;
}

}  // namespace summa
