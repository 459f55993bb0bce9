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

#ifndef SUMMA_QUADRATURE_HPP
#define SUMMA_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "summa/bigfloat.hpp"
#include "summa/rational.hpp"

namespace summa {

enum class CurveKind {
  kV1,       // y = e^(1 - 1/x) / x          on [0, 1], y(0+) = 0, y(1) = 1
  kV2,       // y = 1 / (1 - ln v)           on [0, 1], y(0+) = 0, y(1) = 1
  kOddFact,  // y = e^(1/2) e^(-1/(2t^2))/t^2 on [0, 1], y(0+) = 0, y(1) = 1
  kCustom,
};

struct CurveSpec {
  CurveKind kind = CurveKind::kV1;
  std::function<BigFloat(const BigFloat&, int)> custom;  // f(x, digits)
  Rational lower = 0;
  Rational upper = 1;
  bool singular_left = true;  // left endpoint evaluated as its (zero) limit

  static CurveSpec v1();
  static CurveSpec v2();
  static CurveSpec odd_fact();
  static CurveSpec make_custom(std::function<BigFloat(const BigFloat&, int)> f, Rational lower,
                               Rational upper);

  // Endpoint-limit aware evaluation at the digit budget.
  BigFloat evaluate(const BigFloat& x, int digits) const;
};

struct QuadratureResult {
  BigFloat value;
  std::size_t panels = 0;             // trapezoid only
  BigFloat tolerance;                 // adaptive only
  BigFloat error_estimate;            // >= 0
  std::vector<BigFloat> ordinates;    // trapezoid grid values, when kept
  std::size_t evaluations = 0;
};

// y-values on an explicit grid at the digit budget; singular endpoints give
// their analytic limit, never an overflow.
std::vector<BigFloat> ordinates(const CurveSpec& curve, const std::vector<Rational>& grid,
                                int digits);

// Equal-width composite trapezoid with half-weight endpoints.
QuadratureResult trapezoid(const CurveSpec& curve, std::size_t panels, int digits);

// Romberg ladders on a dyadic mesh graded toward the singular endpoint; the
// reported error estimate is the sum of the per-band Richardson deltas plus
// the bound on the leftover sliver at the singularity. Throws if the
// tolerance is unreachable within the refinement budget.
QuadratureResult adaptive_integral(const CurveSpec& curve, const BigFloat& tol);

// The repo-wide ground truth: the area under V1, cross-checked against V2.
// Both routes must agree to the digit budget.
BigFloat gompertz_constant(int digits);

// Independent series route: e * E1(1) with E1(1) = -gamma + sum (-1)^(k+1)/(k k!).
// Exact rational series plus the Euler-Mascheroni literal; good to ~35 digits.
BigFloat gompertz_series_oracle(int digits);

// Independent series route for the odd-double-factorial area:
// e^(1/2) ( sqrt(pi/2) - sum (-1)^k / (2^k k! (2k+1)) ).
BigFloat odd_factorial_series_oracle(int digits);

}  // namespace summa

#endif  // SUMMA_QUADRATURE_HPP
