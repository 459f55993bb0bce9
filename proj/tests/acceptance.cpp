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

// End-to-end acceptance checks, one line of output per criterion.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "summa/continued_fraction.hpp"
#include "summa/differences.hpp"
#include "summa/quadrature.hpp"
#include "summa/reproduce.hpp"
#include "summa/series.hpp"

using namespace summa;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

std::string section_failures(const RunReport& rep) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& t : rep.targets) {
    if (!t.pass && shown < 3) {
      os << (shown ? "; " : "") << t.name << "=" << t.computed << " want " << t.paper;
      ++shown;
    }
  }
  return os.str();
}

struct Rng {
  std::uint64_t state = 0x6a09e667f3bcc908ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Rational binom(std::size_t n, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i)
    r = r * Rational(static_cast<std::int64_t>(n - i)) / Rational(static_cast<std::int64_t>(i + 1));
  return r;
}

void criterion_1() {
  bool ok = euler_transform_sum({1, 1, 1, 1, 1, 1}).value_exact == Rational(1, 2) &&
            euler_transform_sum({1, 2, 3, 4, 5, 6}).value_exact == Rational(1, 4) &&
            euler_transform_sum({1, 4, 9, 16, 25, 36}).value_exact == Rational(0) &&
            euler_transform_sum({1, 3, 9, 27, 81, 243}).value_exact == Rational(1, 4);
  report(1, "transform exactness on the four catalogue series", ok,
         "1/2, 1/4, 0, 1/4 by exact rational equality");
}

void criterion_2(const BigFloat& gompertz) {
  ExtrapolationReport rep = reproduce_s16_schedule();
  bool exact = rep.value_exact == Rational(38015, 65536);
  BigFloat dec = BigFloat::from_rational(rep.value_exact, 20);
  bool below = dec < gompertz;
  report(2, "three-stage transform schedule", exact && below,
         "= " + rep.value_exact.to_string() + " = " + dec.to_fixed(5) + ", below the true sum");
}

void criterion_3(const BigFloat& gompertz) {
  std::vector<Rational> aux = auxiliary_factorial_table(13);
  std::vector<Rational> recip7;
  for (std::size_t i = 0; i < 11; ++i)
    recip7.push_back(BigFloat::from_rational(aux[i].reciprocal(), 24).rounded_at(7).to_rational());
  ExtrapolationReport seven = newton_extrapolate_zero(recip7, 5);
  BigFloat seven_v = BigFloat::from_rational(seven.value_exact, 20);
  bool budget_ok = (seven_v - BigFloat("1.6517401")).abs() <= BigFloat(BigInt(5), -7);

  std::vector<Rational> recip;
  for (const auto& a : aux) recip.push_back(a.reciprocal());
  ExtrapolationReport full = newton_extrapolate_zero(recip);
  BigFloat inv_g = BigFloat::div(BigFloat(1), gompertz, 16);
  BigFloat gap = (full.value - inv_g).abs();
  bool full_ok = gap <= BigFloat("0.002");
  report(3, "reciprocal-table extrapolation", budget_ok && full_ok,
         "7-digit scheme " + seven_v.to_fixed(7) + "; full precision off the reciprocal by " +
             gap.rounded(2).to_string());
}

void criterion_4() {
  LogExtrapolationReport rep = log_extrapolate(auxiliary_factorial_table(9), 7, 6);
  BigFloat gap = (rep.value - BigFloat("0.59966")).abs();
  report(4, "log-table extrapolation at the seven-digit budget", gap <= BigFloat(BigInt(5), -5),
         "A = " + rep.value.to_fixed(7) + ", |A - 0.59966| = " + gap.rounded(2).to_string());
}

void criterion_5(const BigFloat& gompertz) {
  RunReport rep = reproduce_section("s19");
  bool tables_ok = rep.ok();
  QuadratureResult t10 = trapezoid(CurveSpec::v1(), 10, 16);
  BigFloat gap = (t10.value - gompertz).abs();
  bool close = gap < BigFloat("0.00003");
  report(5, "ten-panel trapezoid table and refinement", tables_ok && close,
         tables_ok ? ("|T10 - A| = " + gap.rounded(2).to_string() + ", panels 20/40/80 improve")
                   : section_failures(rep));
}

void criterion_6() {
  BigFloat tol(BigInt(5), -11);
  QuadratureResult a = adaptive_integral(CurveSpec::v1(), tol);
  QuadratureResult b = adaptive_integral(CurveSpec::v2(), tol);
  BigFloat gap = (a.value - b.value).abs();
  report(6, "substitution identity between the two integral forms",
         gap < BigFloat(BigInt(1), -10), "|V1 - V2| = " + gap.rounded(2).to_string());
}

void criterion_7() {
  std::vector<Rational> fact;
  Rational c = 1;
  for (std::size_t k = 0; k < 9; ++k) {
    if (k > 0) c *= Rational(static_cast<std::int64_t>(k));
    fact.push_back(k % 2 == 0 ? c : -c);
  }
  EulerCF cf = series_to_cf(fact, 7);
  bool law_ok = cf.numerators == std::vector<Rational>{1, 1, 2, 2, 3, 3, 4};

  bool grid_ok = true;
  for (std::int64_t p = 1; p <= 3 && grid_ok; ++p) {
    for (std::int64_t q = 1; q <= 3 && grid_ok; ++q) {
      std::vector<Rational> coeffs;
      Rational cc = 1, f = Rational(p);
      for (std::size_t k = 0; k < 12; ++k) {
        if (k > 0) {
          cc *= f;
          f += Rational(q);
        }
        coeffs.push_back(k % 2 == 0 ? cc : -cc);
      }
      if (series_to_cf(coeffs, 8).numerators != hypergeometric_cf(p, q, 8).numerators)
        grid_ok = false;
    }
  }

  // the Riccati law at c = 0 collapses to the p,q pattern, symbolically in
  // the sense of exact rational identity across parameters
  bool ode_ok = true;
  for (const auto& pq : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(1)}, {Rational(7, 2), Rational(3)}, {Rational(2), Rational(5)}}) {
    Rational m(1);
    std::vector<Rational> got =
        ode_cf_numerators(1, pq.first - m, 1, 0, m, m - pq.second, 10);
    if (got != hypergeometric_cf(pq.first, pq.second, 10).numerators) ode_ok = false;
  }
  report(7, "series-to-fraction law and its parametric generators", law_ok && grid_ok && ode_ok,
         "division, parametric family, and Riccati form agree");
}

void criterion_8(const RunReport& s22) {
  report(8, "convergent table, mean rounds, interlacing", s22.ok(),
         s22.ok() ? std::to_string(s22.exact_matches) + " digit-exact targets"
                  : section_failures(s22));
}

void criterion_9() {
  EulerCF cf = hypergeometric_cf(1, 1, 40);
  TailComposition comp = compose_tail(cf, 1, {21, 31, 41}, BigFloat(), 12);
  bool ok = comp.blocks.size() == 3 && comp.blocks[0].a == BigInt(491459820) &&
            comp.blocks[0].b == BigInt(139931620) && comp.blocks[0].c == BigInt(824073141) &&
            comp.blocks[0].d == BigInt(234662231) && comp.blocks[1].a == BigInt(2381951) &&
            comp.blocks[1].b == BigInt(649286) && comp.blocks[1].c == BigInt(887640) &&
            comp.blocks[1].d == BigInt(187440) && comp.blocks[2].a == BigInt(11437136) &&
            comp.blocks[2].b == BigInt(2924816) && comp.blocks[2].c == BigInt(3697925) &&
            comp.blocks[2].d == BigInt(643025);
  report(9, "exact integer block maps", ok, "all three linear-fractional maps reproduced");
}

void criterion_10(const BigFloat& gompertz, const RunReport& s25) {
  BigFloat full = sum_by_cf_closure(SeriesSpec::factorial(1), 41, 14);
  BigFloat gap_full = (full - gompertz).abs();
  BigFloat gap_printed = (BigFloat("0.5963473621372") - gompertz).abs();
  bool ok = gap_full < BigFloat(BigInt(1), -8) && gap_printed < BigFloat(BigInt(2), -10) &&
            s25.ok();
  report(10, "closure pipeline and the regular fraction of its value", ok,
         s25.ok() ? ("|pipeline - A| = " + gap_full.rounded(2).to_string() +
                     ", |printed - A| = " + gap_printed.rounded(2).to_string())
                  : section_failures(s25));
}

void criterion_11(const RunReport& s29) {
  BigFloat z = sum_by_cf_closure(SeriesSpec::odd_double_factorial(1), 11, 14);
  BigFloat oracle = odd_factorial_series_oracle(14);
  bool ok = (z - BigFloat("0.65568")).abs() < BigFloat(BigInt(5), -5) &&
            (z - oracle).abs() < BigFloat(BigInt(1), -3) && s29.ok();
  report(11, "odd-double-factorial table and closure", ok,
         s29.ok() ? ("z = " + z.rounded(7).to_string() + ", oracle " + oracle.rounded(11).to_string())
                  : section_failures(s29));
}

void criterion_12(const BigFloat& gompertz) {
  bool ok = true;
  std::string why;

  // difference-table binomial identity on random rationals
  Rng rng;
  for (int trial = 0; trial < 12 && ok; ++trial) {
    std::vector<Rational> vals;
    for (int i = 0; i < 9; ++i) vals.emplace_back(rng.range(-99, 99), rng.range(1, 30));
    DifferenceTable t = difference_table(vals, 8);
    for (std::size_t k = 0; k <= 8 && ok; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i <= k; ++i)
        acc += (((k - i) % 2 == 0) ? Rational(1) : Rational(-1)) * binom(k, i) * vals[i];
      if (t.top(k) != acc) {
        ok = false;
        why = "binomial identity";
      }
    }
  }

  // fraction round trip to order 12
  if (ok) {
    std::vector<Rational> fact;
    Rational c = 1;
    for (std::size_t k = 0; k < 14; ++k) {
      if (k > 0) c *= Rational(static_cast<std::int64_t>(k));
      fact.push_back(k % 2 == 0 ? c : -c);
    }
    EulerCF cf = series_to_cf(fact, 12);
    std::vector<Rational> back = expand_to_series(cf, 12);
    for (std::size_t k = 0; k <= 12; ++k)
      if (back[k] != fact[k]) {
        ok = false;
        why = "round trip";
      }
  }

  // convergent determinant identity
  if (ok) {
    EulerCF cf = hypergeometric_cf(1, 1, 12);
    auto conv = convergents(cf, 1, 10);
    BigInt prod(1);
    std::vector<Rational> nums;
    nums.push_back(cf.leading);
    for (const auto& cnum : cf.numerators) nums.push_back(cnum);
    for (std::size_t k = 1; k < conv.size(); ++k) {
      prod = prod * nums[k - 1].num();
      BigInt det = conv[k].p * conv[k - 1].q - conv[k - 1].p * conv[k].q;
      if (det.abs() != prod.abs()) {
        ok = false;
        why = "determinant identity";
      }
    }
  }

  // alternating harmonic vs ln 2 through the quadrature oracle
  if (ok) {
    std::vector<Rational> mags;
    for (std::int64_t k = 1; k <= 40; ++k) mags.emplace_back(1, k);
    CurveSpec curve = CurveSpec::make_custom(
        [](const BigFloat& v, int digits) { return BigFloat::div(BigFloat(1), v, digits); },
        Rational(1), Rational(2));
    BigFloat ln2 = adaptive_integral(curve, BigFloat(BigInt(1), -30)).value;
    if ((euler_transform_sum(mags).value - ln2).abs() >= BigFloat(BigInt(1), -10)) {
      ok = false;
      why = "alternating harmonic vs ln 2";
    }
  }

  // genus classifier across the catalogue's eight examples
  if (ok) {
    std::vector<Rational> frac_terms, frac_alt, alt_unit, naturals, alt_naturals, alt_powers;
    Rational pw = 1;
    for (std::int64_t k = 1; k <= 40; ++k) {
      frac_terms.emplace_back(k, k + 1);
      frac_alt.push_back(k % 2 == 1 ? Rational(k, k + 1) : -Rational(k, k + 1));
      alt_unit.push_back(k % 2 == 1 ? 1 : -1);
      naturals.emplace_back(k);
      alt_naturals.push_back(k % 2 == 1 ? Rational(k) : Rational(-k));
      alt_powers.push_back(k % 2 == 1 ? pw : -pw);
      pw *= Rational(2);
    }
    try {
      bool genus_ok =
          classify_genus(SeriesSpec::geometric(1)) == Genus::kI &&
          classify_genus(SeriesSpec::custom(frac_terms, 1)) == Genus::kI &&
          classify_genus(SeriesSpec::custom(alt_unit, 1)) == Genus::kII &&
          classify_genus(SeriesSpec::custom(frac_alt, 1)) == Genus::kII &&
          classify_genus(SeriesSpec::custom(naturals, 1)) == Genus::kIII &&
          classify_genus(SeriesSpec::geometric(2)) == Genus::kIII &&
          classify_genus(SeriesSpec::custom(alt_naturals, 1)) == Genus::kIV &&
          classify_genus(SeriesSpec::custom(alt_powers, 1)) == Genus::kIV;
      if (!genus_ok) {
        ok = false;
        why = "genus classifier";
      }
    } catch (const std::exception&) {
      ok = false;
      why = "genus classifier threw";
    }
  }

  (void)gompertz;
  report(12, "property suites", ok, ok ? "differences, round trip, determinants, ln 2, genus"
                                       : why);
}

}  // namespace

int main() {
  BigFloat gompertz = gompertz_series_oracle(16);
  RunReport s22 = reproduce_section("s22");
  RunReport s25 = reproduce_section("s25");
  RunReport s29 = reproduce_section("s29");

  criterion_1();
  criterion_2(gompertz);
  criterion_3(gompertz);
  criterion_4();
  criterion_5(gompertz);
  criterion_6();
  criterion_7();
  criterion_8(s22);
  criterion_9();
  criterion_10(gompertz, s25);
  criterion_11(s29);
  criterion_12(gompertz);

  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
