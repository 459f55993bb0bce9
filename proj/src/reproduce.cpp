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

#include "summa/reproduce.hpp"

#include <stdexcept>

#include "summa/continued_fraction.hpp"
#include "summa/differences.hpp"
#include "summa/quadrature.hpp"
#include "summa/series.hpp"

namespace summa {

const char* tolerance_class_name(ToleranceClass c) {
  switch (c) {
    case ToleranceClass::kExact: return "EXACT";
    case ToleranceClass::kPrinted: return "PRINTED";
    case ToleranceClass::kOracle: return "ORACLE";
    case ToleranceClass::kBound: return "BOUND";
  }
  return "?";
}

namespace {

Target exact_rational(std::string name, const Rational& expected, const Rational& computed,
                      std::string note = "") {
  Target t;
  t.name = std::move(name);
  t.paper = expected.to_string();
  t.computed = computed.to_string();
  t.pass = computed == expected;
  t.diff = t.pass ? "0" : (computed - expected).abs().to_string();
  t.tolerance_class = ToleranceClass::kExact;
  t.note = std::move(note);
  return t;
}

Target exact_string(std::string name, std::string expected, std::string computed,
                    std::string note = "") {
  Target t;
  t.name = std::move(name);
  t.paper = std::move(expected);
  t.computed = std::move(computed);
  t.pass = t.paper == t.computed;
  t.diff = t.pass ? "0" : "";
  t.tolerance_class = ToleranceClass::kExact;
  t.note = std::move(note);
  return t;
}

// Match the printed digits at their own grain: computed is rendered with the
// same number of decimals and compared as a string. Where the print is a
// known misprint, `expected_digits` carries the recomputed self-consistent
// value and `note` records what the source shows.
Target printed(std::string name, std::string expected_digits, const BigFloat& computed,
               int decimals, std::string note = "") {
  Target t;
  t.name = std::move(name);
  t.paper = expected_digits;
  t.computed = computed.to_fixed(decimals);
  t.pass = t.computed == expected_digits;
  BigFloat diff = (computed - BigFloat(std::string_view(expected_digits))).abs();
  t.diff = diff.rounded(4).to_string();
  t.tolerance_class = ToleranceClass::kPrinted;
  t.note = std::move(note);
  return t;
}

// |computed - reference| <= bound
Target within(std::string name, const BigFloat& reference, const BigFloat& computed,
              const BigFloat& bound, ToleranceClass cls, std::string note = "") {
  Target t;
  t.name = std::move(name);
  t.paper = reference.to_string();
  t.computed = computed.to_string();
  BigFloat diff = (computed - reference).abs();
  t.diff = diff.rounded(4).to_string();
  t.pass = diff <= bound;
  t.tolerance_class = cls;
  t.note = std::move(note);
  return t;
}

Target bound_true(std::string name, bool holds, std::string computed, std::string expectation) {
  Target t;
  t.name = std::move(name);
  t.paper = std::move(expectation);
  t.computed = std::move(computed);
  t.pass = holds;
  t.tolerance_class = ToleranceClass::kBound;
  return t;
}

void finish(RunReport& rep) {
  for (const auto& t : rep.targets)
    if (t.pass && (t.tolerance_class == ToleranceClass::kExact ||
                   t.tolerance_class == ToleranceClass::kPrinted))
      ++rep.exact_matches;
}

std::vector<Rational> magnitudes(std::initializer_list<std::int64_t> v) {
  std::vector<Rational> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

RunReport run_s15() {
  RunReport rep;
  rep.section = "s15";
  struct Case {
    const char* name;
    std::vector<Rational> mags;
    Rational expected;
  };
  std::vector<Case> cases;
  cases.push_back({"1-1+1-1+...", magnitudes({1, 1, 1, 1, 1, 1}), Rational(1, 2)});
  cases.push_back({"1-2+3-4+...", magnitudes({1, 2, 3, 4, 5, 6}), Rational(1, 4)});
  cases.push_back({"1-4+9-16+...", magnitudes({1, 4, 9, 16, 25, 36}), Rational(0)});
  cases.push_back({"1-3+9-27+...", magnitudes({1, 3, 9, 27, 81, 243}), Rational(1, 4)});
  for (auto& c : cases) {
    ExtrapolationReport r = euler_transform_sum(c.mags);
    rep.targets.push_back(exact_rational(c.name, c.expected, r.value_exact));
  }
  finish(rep);
  return rep;
}

RunReport run_s16() {
  RunReport rep;
  rep.section = "s16";
  ExtrapolationReport r = reproduce_s16_schedule();
  rep.targets.push_back(exact_rational("three_stage_sum", Rational(38015, 65536), r.value_exact));
  rep.targets.push_back(
      printed("decimal", "0.580", BigFloat::from_rational(r.value_exact, 20), 3));
  BigFloat oracle = gompertz_series_oracle(12);
  bool below = BigFloat::from_rational(r.value_exact, 20) < oracle;
  rep.targets.push_back(bound_true("below_true_sum", below,
                                   BigFloat::from_rational(r.value_exact, 12).to_string(),
                                   "< " + oracle.rounded(10).to_string()));
  finish(rep);
  return rep;
}

RunReport run_s17() {
  RunReport rep;
  rep.section = "s17";

  std::vector<Rational> aux = auxiliary_factorial_table(13);
  rep.targets.push_back(exact_string(
      "aux_table_7", "1,2,5,16,65,326,1957",
      [&] {
        std::string s;
        for (std::size_t i = 0; i < 7; ++i) s += (i ? "," : "") + aux[i].to_string();
        return s;
      }()));

  // the printed scheme: reciprocals at seven decimals, five difference columns
  std::vector<Rational> recip7;
  for (std::size_t i = 0; i < 11; ++i)
    recip7.push_back(
        BigFloat::from_rational(aux[i].reciprocal(), 24).rounded_at(7).to_rational());
  ExtrapolationReport seven = newton_extrapolate_zero(recip7, 5);
  rep.targets.push_back(
      printed("newton_7digit", "1.6517401", BigFloat::from_rational(seven.value_exact, 20), 7));

  // full precision: exact reciprocals, optimal truncation plus half the first
  // omitted term; the method's intrinsic error is what the tolerance states
  std::vector<Rational> recip;
  for (const auto& a : aux) recip.push_back(a.reciprocal());
  ExtrapolationReport full = newton_extrapolate_zero(recip);
  BigFloat inv_g = BigFloat::div(BigFloat(1), gompertz_series_oracle(16), 16);
  rep.targets.push_back(within("newton_full_precision_vs_reciprocal_gompertz", inv_g, full.value,
                               BigFloat("0.002"), ToleranceClass::kOracle));
  finish(rep);
  return rep;
}

RunReport run_s18() {
  RunReport rep;
  rep.section = "s18";
  std::vector<Rational> aux = auxiliary_factorial_table(9);
  LogExtrapolationReport r = log_extrapolate(aux, 7, 6);
  BigFloat log_inv = r.log_value.negated();
  rep.targets.push_back(printed("log_reciprocal", "0.2220911", log_inv, 7));
  rep.targets.push_back(
      printed("log_complement_display", "0.7779089", BigFloat(1) - log_inv, 7));
  rep.targets.push_back(within("value", BigFloat("0.59966"), r.value, BigFloat("0.00005"),
                               ToleranceClass::kPrinted));
  finish(rep);
  return rep;
}

RunReport run_s19() {
  RunReport rep;
  rep.section = "s19";
  CurveSpec v1 = CurveSpec::v1();

  struct Addend {
    const char* printed;
    const char* note;
  };
  // panel-weighted ordinates 1/(k e^((10-k)/k)), eight decimals
  const Addend printed_addends[9] = {
      {"0.00012341", ""},
      {"0.00915782", ""},
      {"0.03232399", ""},
      {"0.05578254", ""},
      {"0.07357589", ""},
      {"0.08556952", ""},
      {"0.09306272", ""},
      {"0.09735010", "source prints 0.09735007; exact arithmetic gives ...010"},
      {"0.09942659", ""},
  };
  BigFloat fixed_sum;
  for (int k = 1; k <= 9; ++k) {
    BigFloat y = v1.evaluate(BigFloat::from_rational(Rational(k, 10), 24), 20);
    BigFloat addend = (y * BigFloat("0.1")).rounded_at(8);
    fixed_sum += addend;
    rep.targets.push_back(printed("addend_" + std::to_string(k), printed_addends[k - 1].printed,
                                  addend, 8, printed_addends[k - 1].note));
  }
  fixed_sum += BigFloat("0.05");
  rep.targets.push_back(printed(
      "panel_sum_8dp", "0.59637258", fixed_sum, 8,
      "source prints 0.59637255, consistent with its own miscopied eighth addend"));
  rep.targets.push_back(within("panel_sum_vs_printed_A", BigFloat("0.59637255"), fixed_sum,
                               BigFloat(BigInt(5), -8), ToleranceClass::kPrinted));

  BigFloat oracle = gompertz_series_oracle(14);
  QuadratureResult t10 = trapezoid(v1, 10, 16);
  rep.targets.push_back(within("trapezoid10_vs_gompertz", oracle, t10.value,
                               BigFloat("0.00003"), ToleranceClass::kOracle));

  BigFloat prev_err = (t10.value - oracle).abs();
  bool monotone = true;
  std::string chain = prev_err.rounded(3).to_string();
  for (std::size_t panels : {20u, 40u, 80u}) {
    BigFloat err = (trapezoid(v1, panels, 16).value - oracle).abs();
    if (err >= prev_err) monotone = false;
    chain += " > " + err.rounded(3).to_string();
    prev_err = err;
  }
  rep.targets.push_back(
      bound_true("refinement_monotone_20_40_80", monotone, chain, "strictly decreasing"));
  finish(rep);
  return rep;
}

RunReport run_s22() {
  RunReport rep;
  rep.section = "s22";
  EulerCF cf = hypergeometric_cf(1, 1, 12);
  std::vector<ConvergentPair> conv = convergents(cf, 1, 10);

  const char* fractions[10] = {"0/1", "1/1", "1/2", "2/3",  "4/7",
                               "8/13", "20/34", "44/73", "124/209", "300/501"};
  for (std::size_t i = 0; i < 10; ++i) {
    rep.targets.push_back(exact_string("convergent_" + std::to_string(i), fractions[i],
                                       conv[i].p.to_string() + "/" + conv[i].q.to_string()));
  }

  struct Dec {
    const char* digits;
    const char* note;
  };
  const Dec decimals[10] = {
      {"0.0000000000", ""},
      {"1.0000000000", ""},
      {"0.5000000000", ""},
      {"0.6666666667", ""},
      {"0.5714285714", ""},
      {"0.6153846154", ""},
      {"0.5882352941", ""},
      {"0.6027397260", ""},
      {"0.5933014354", "source prints 0.5933001436; 124/209 = 0.5933014354"},
      {"0.5988023952", ""},
  };
  std::vector<Rational> values;
  for (std::size_t i = 0; i < 10; ++i) {
    Rational v(conv[i].p, conv[i].q);
    values.push_back(v);
    rep.targets.push_back(printed("decimal_" + std::to_string(i), decimals[i].digits,
                                  BigFloat::from_rational(v, 24), 10, decimals[i].note));
  }

  // arithmetic means of adjacent convergents, two rounds, exact rationals
  std::vector<Rational> round1, round2;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    round1.push_back((values[i] + values[i + 1]) / Rational(2));
  for (std::size_t i = 0; i + 1 < round1.size(); ++i)
    round2.push_back((round1[i] + round1[i + 1]) / Rational(2));

  const Dec mean1[9] = {
      {"0.5000000000", ""},
      {"0.7500000000", ""},
      {"0.5833333333", ""},
      {"0.6190476190", ""},
      {"0.5934065934", ""},
      {"0.6018099548", ""},
      {"0.5954875101", "source prints 0.5954875100; 739/1241 = 0.59548751007..."},
      {"0.5980205807", ""},
      {"0.5960519153", ""},
  };
  for (std::size_t i = 0; i < round1.size(); ++i)
    rep.targets.push_back(printed("mean1_" + std::to_string(i), mean1[i].digits,
                                  BigFloat::from_rational(round1[i], 24), 10, mean1[i].note));

  const char* mean2[8] = {"0.6250000000", "0.6666666667", "0.6011904762", "0.6062271062",
                          "0.5976082741", "0.5986487324", "0.5967540454", "0.5970362480"};
  for (std::size_t i = 0; i < round2.size(); ++i) {
    Target t = printed("mean2_" + std::to_string(i), mean2[i],
                       BigFloat::from_rational(round2[i], 24), 10);
    t.tolerance_class = ToleranceClass::kOracle;  // derived, not printed in the source
    rep.targets.push_back(t);
  }

  // interlacing against the ground truth
  BigFloat oracle = gompertz_series_oracle(14);
  bool interlace = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    BigFloat v = BigFloat::from_rational(values[i], 20);
    if (i % 2 == 0 ? !(v < oracle) : !(v > oracle)) interlace = false;
  }
  rep.targets.push_back(bound_true("interlacing", interlace,
                                   interlace ? "even below, odd above" : "violated",
                                   "even-index convergents below the value, odd above"));
  finish(rep);
  return rep;
}

RunReport run_s25() {
  RunReport rep;
  rep.section = "s25";

  // exact block maps: the fraction cut after the 10,10 pair, then 11..15, 16..20
  EulerCF cf = hypergeometric_cf(1, 1, 40);
  TailComposition comp = compose_tail(cf, 1, {21, 31, 41}, BigFloat(), 12);
  struct MapRow {
    const char* name;
    const char* a;
    const char* b;
    const char* c;
    const char* d;
  };
  const MapRow maps[3] = {
      {"A_block", "491459820", "139931620", "824073141", "234662231"},
      {"p_block", "2381951", "649286", "887640", "187440"},
      {"q_block", "11437136", "2924816", "3697925", "643025"},
  };
  for (std::size_t i = 0; i < 3; ++i) {
    const LinearFractionalMap& m = comp.blocks[i];
    rep.targets.push_back(exact_string(
        std::string(maps[i].name), std::string(maps[i].a) + "," + maps[i].b + "," + maps[i].c +
                                       "," + maps[i].d,
        m.a.to_string() + "," + m.b.to_string() + "," + m.c.to_string() + "," + m.d.to_string()));
  }

  // the printed rounding chain: s to three decimals, r to two, then exact
  // fraction arithmetic at each printed grain
  TailClosure tc = tail_cubic(22, 20);
  rep.targets.push_back(printed("cubic_root_s", "4.423", tc.s, 3));
  Rational s3(4423, 1000);
  Rational r_num = Rational(21) * (s3 + Rational(1));
  Rational r_den = s3 + Rational(22);
  rep.targets.push_back(exact_string("r_fraction",
                                     "113.883/26.423",
                                     BigFloat::from_rational(r_num, 12).to_fixed(3) + "/" +
                                         BigFloat::from_rational(r_den, 12).to_fixed(3)));
  BigFloat r2 = BigFloat::from_rational(r_num / r_den, 20).rounded_at(2);
  rep.targets.push_back(printed("r_rounded", "4.31", r2, 2));

  Rational r2r = r2.to_rational();
  Rational q_num = Rational(11437136) + Rational(2924816) * r2r;
  Rational q_den = Rational(3697925) + Rational(643025) * r2r;
  BigInt q_num_i = BigFloat::from_rational(q_num, 20).rounded_at(0).to_rational().num();
  BigInt q_den_i = BigFloat::from_rational(q_den, 20).rounded_at(0).to_rational().num();
  rep.targets.push_back(exact_string("q_fraction", "24043093/6469363",
                                     q_num_i.to_string() + "/" + q_den_i.to_string()));
  BigFloat q8 =
      BigFloat::div(BigFloat(q_num_i, 0), BigFloat(q_den_i, 0), 20).rounded_at(8);
  rep.targets.push_back(printed("q_decimal", "3.71645446", q8, 8));

  Rational q8r = q8.to_rational();
  BigFloat p_num = BigFloat::from_rational(Rational(2381951) + Rational(649286) * q8r, 24)
                       .rounded_at(2);
  BigFloat p_den = BigFloat::from_rational(Rational(887640) + Rational(187440) * q8r, 24)
                       .rounded_at(2);
  rep.targets.push_back(exact_string("p_fraction", "4794992.85/1584252.22",
                                     p_num.to_fixed(2) + "/" + p_den.to_fixed(2)));
  BigFloat p10 = BigFloat::div(p_num, p_den, 20).rounded_at(10);
  rep.targets.push_back(printed("p_decimal", "3.0266600163", p10, 10));

  Rational p10r = p10.to_rational();
  BigFloat a_num = BigFloat::from_rational(Rational(491459820) + Rational(139931620) * p10r, 26)
                       .rounded_at(2);
  BigFloat a_den = BigFloat::from_rational(Rational(824073141) + Rational(234662231) * p10r, 26)
                       .rounded_at(2);
  rep.targets.push_back(exact_string("A_fraction", "914985259.27/1534315932.90",
                                     a_num.to_fixed(2) + "/" + a_den.to_fixed(2)));
  BigFloat a13 = BigFloat::div(a_num, a_den, 22).rounded_at(13);
  rep.targets.push_back(printed("A_decimal", "0.5963473621372", a13, 13));

  // accuracy of the printed value, and of the full-precision pipeline
  BigFloat oracle = gompertz_series_oracle(16);
  rep.targets.push_back(within("printed_A_vs_gompertz", oracle, BigFloat("0.5963473621372"),
                               BigFloat(BigInt(2), -10), ToleranceClass::kOracle));
  BigFloat full = sum_by_cf_closure(SeriesSpec::factorial(1), 41, 14);
  rep.targets.push_back(within("full_pipeline_vs_gompertz", oracle, full,
                               BigFloat(BigInt(1), -8), ToleranceClass::kOracle));

  // regular continued fraction of the printed value
  RegularCF reg = real_to_regular_cf(BigFloat("0.5963473621372"), 11);
  std::string quots;
  for (std::size_t i = 0; i < reg.quotients.size() && i < 11; ++i)
    quots += (i ? "," : "") + reg.quotients[i].to_string();
  rep.targets.push_back(exact_string("regular_cf", "0,1,1,2,10,1,1,4,2,2,13", quots));

  std::vector<ConvergentPair> rconv = regular_convergents(reg);
  const char* rfracs[10] = {"0/1",    "1/1",    "1/2",     "3/5",      "31/52",
                            "34/57",  "65/109", "294/493", "653/1095", "1600/2683"};
  for (std::size_t i = 0; i < 10 && i < rconv.size(); ++i)
    rep.targets.push_back(exact_string("regular_convergent_" + std::to_string(i), rfracs[i],
                                       rconv[i].p.to_string() + "/" + rconv[i].q.to_string()));

  // |A - 1600/2683| < 1/(2683 * 35974)
  Rational a_val = BigFloat("0.5963473621372").to_rational();
  Rational gap = (a_val - Rational(1600, 2683)).abs();
  bool bound_ok = gap < Rational(BigInt(1), BigInt(2683) * BigInt(35974));
  rep.targets.push_back(bound_true("best_approximation_bound", bound_ok,
                                   gap.to_string(), "< 1/(2683*35974)"));
  rep.targets.push_back(
      printed("reciprocal", "1.676875",
              BigFloat::div(BigFloat(2683), BigFloat(1600), 16), 6));
  finish(rep);
  return rep;
}

RunReport run_s29() {
  RunReport rep;
  rep.section = "s29";

  TermSequence t = terms(SeriesSpec::odd_double_factorial(1), 5);
  std::string terms_str;
  for (std::size_t i = 0; i < t.values.size(); ++i)
    terms_str += (i ? "," : "") + t.values[i].to_string();
  rep.targets.push_back(exact_string("series_terms", "1,-1,3,-15,105", terms_str));

  // the series in w = x^2 after factoring the leading x; five division levels
  std::vector<Rational> w_coeffs;
  Rational c = 1;
  for (int k = 0; k < 10; ++k) {
    if (k > 0) c *= Rational(2 * k - 1);
    w_coeffs.push_back(k % 2 == 0 ? c : -c);
  }
  EulerCF from_series = series_to_cf(w_coeffs, 5);
  std::string nums;
  for (std::size_t i = 0; i < from_series.numerators.size(); ++i)
    nums += (i ? "," : "") + from_series.numerators[i].to_string();
  rep.targets.push_back(exact_string("cf_numerators", "1,2,3,4,5", nums));

  EulerCF cf;
  cf.leading = 1;
  cf.leading_power = 1;
  cf.power = 2;
  for (std::int64_t i = 1; i <= 11; ++i) cf.numerators.push_back(Rational(i));
  std::vector<ConvergentPair> conv = convergents(cf, 1, 12);
  const char* fractions[12] = {"0/1",     "1/1",     "1/2",      "3/4",       "6/10",
                               "18/26",   "48/76",   "156/232",  "492/764",   "1740/2620",
                               "6168/9496", "23568/35696"};
  for (std::size_t i = 0; i < 12; ++i)
    rep.targets.push_back(exact_string("convergent_" + std::to_string(i), fractions[i],
                                       conv[i].p.to_string() + "/" + conv[i].q.to_string()));

  TailComposition comp = compose_tail(cf, 1, {11}, BigFloat(), 12);
  const LinearFractionalMap& m = comp.blocks[0];
  rep.targets.push_back(exact_string("z_block", "23568,6168,35696,9496",
                                     m.a.to_string() + "," + m.b.to_string() + "," +
                                         m.c.to_string() + "," + m.d.to_string()));
  BigInt g = BigInt::gcd(BigInt::gcd(m.a, m.b), BigInt::gcd(m.c, m.d));
  rep.targets.push_back(exact_string(
      "z_block_reduced", "2946,771,4462,1187",
      (m.a / g).to_string() + "," + (m.b / g).to_string() + "," + (m.c / g).to_string() + "," +
          (m.d / g).to_string(),
      "source prints the third entry as 4402; its own numeric column uses 4462"));

  TailClosure tc = tail_cubic_stepped(11, 20);
  rep.targets.push_back(printed("cubic_root_q", "2.94", tc.s, 2));
  rep.targets.push_back(printed("p_value", "2.79", tc.r, 2));

  // the printed chain at its own grain: q = 2.94, p = 11/3.94 to two decimals
  Rational q2(294, 100);
  BigFloat p2 = BigFloat::from_rational(Rational(11) / (Rational(1) + q2), 20).rounded_at(2);
  Rational p2r = p2.to_rational();
  BigFloat z_num = BigFloat::from_rational(Rational(2946) + Rational(771) * p2r, 20).rounded_at(2);
  BigFloat z_den = BigFloat::from_rational(Rational(4462) + Rational(1187) * p2r, 20).rounded_at(2);
  rep.targets.push_back(exact_string("z_fraction", "5097.09/7773.73",
                                     z_num.to_fixed(2) + "/" + z_den.to_fixed(2)));
  BigFloat z5 = BigFloat::div(z_num, z_den, 16).rounded_at(5);
  rep.targets.push_back(printed("z_printed", "0.65568", z5, 5));

  BigFloat z_full = sum_by_cf_closure(SeriesSpec::odd_double_factorial(1), 11, 14);
  rep.targets.push_back(within("closure_vs_printed", BigFloat("0.65568"), z_full,
                               BigFloat(BigInt(5), -5), ToleranceClass::kOracle));
  BigFloat oracle = odd_factorial_series_oracle(14);
  rep.targets.push_back(within("closure_vs_series_oracle", oracle, z_full, BigFloat(BigInt(1), -3),
                               ToleranceClass::kOracle));
  QuadratureResult quad = adaptive_integral(CurveSpec::odd_fact(), BigFloat(BigInt(1), -10));
  rep.targets.push_back(within("quadrature_vs_series_oracle", oracle, quad.value,
                               BigFloat(BigInt(1), -10), ToleranceClass::kOracle));
  finish(rep);
  return rep;
}

}  // namespace

std::vector<std::string> reproduce_section_names() {
  return {"s15", "s16", "s17", "s18", "s19", "s22", "s25", "s29"};
}

RunReport reproduce_section(const std::string& name) {
  if (name == "s15") return run_s15();
  if (name == "s16") return run_s16();
  if (name == "s17") return run_s17();
  if (name == "s18") return run_s18();
  if (name == "s19") return run_s19();
  if (name == "s22") return run_s22();
  if (name == "s25") return run_s25();
  if (name == "s29") return run_s29();
  throw std::invalid_argument("reproduce: unknown section " + name);
}

std::vector<RunReport> reproduce_all() {
  std::vector<RunReport> out;
  for (const auto& name : reproduce_section_names()) out.push_back(reproduce_section(name));
  return out;
}

}  // namespace summa
