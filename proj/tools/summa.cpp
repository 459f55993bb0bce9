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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "summa/continued_fraction.hpp"
#include "summa/differences.hpp"
#include "summa/quadrature.hpp"
#include "summa/reproduce.hpp"
#include "summa/series.hpp"

namespace {

using summa::BigFloat;
using summa::Rational;
using summa::SeriesFamily;
using summa::SeriesSpec;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitBreakdown = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedSeries {
  SeriesSpec spec;
  bool cyclic = false;  // custom list ended in "..."
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// Grammar: factorial@x=1, hypergeom:p=1,q=2@x=1, geometric:r=2,
// custom:[1,-1,2,-6]@x=1, oddfact@x=1. A custom list may end in "..." to
// continue the written pattern cyclically.
ParsedSeries parse_series(const std::string& text, std::size_t cyclic_fill) {
  ParsedSeries out;
  std::string body = text;
  Rational x = 1;
  auto at = body.find('@');
  if (at != std::string::npos) {
    std::string xpart = body.substr(at + 1);
    body = body.substr(0, at);
    if (xpart.rfind("x=", 0) != 0) throw UsageError("series: expected @x=<value>");
    x = Rational::parse(xpart.substr(2));
  }
  std::string name = body;
  std::string args;
  auto colon = body.find(':');
  if (colon != std::string::npos) {
    name = body.substr(0, colon);
    args = body.substr(colon + 1);
  }

  if (name == "factorial") {
    out.spec = SeriesSpec::factorial(x);
  } else if (name == "oddfact") {
    out.spec = SeriesSpec::odd_double_factorial(x);
  } else if (name == "geometric") {
    if (args.rfind("r=", 0) != 0) throw UsageError("geometric: expected r=<ratio>");
    out.spec = SeriesSpec::geometric(Rational::parse(args.substr(2)));
  } else if (name == "hypergeom") {
    Rational p = 1, q = 1, m = 0;
    for (const auto& kv : split(args, ',')) {
      if (kv.rfind("p=", 0) == 0)
        p = Rational::parse(kv.substr(2));
      else if (kv.rfind("q=", 0) == 0)
        q = Rational::parse(kv.substr(2));
      else if (kv.rfind("m=", 0) == 0)
        m = Rational::parse(kv.substr(2));
      else
        throw UsageError("hypergeom: unknown parameter " + kv);
    }
    out.spec = SeriesSpec::hypergeometric(p, q, m, x);
  } else if (name == "custom") {
    if (args.size() < 2 || args.front() != '[' || args.back() != ']')
      throw UsageError("custom: expected [c0,c1,...]");
    std::vector<Rational> coeffs;
    for (auto& piece : split(args.substr(1, args.size() - 2), ',')) {
      if (piece == "...") {
        out.cyclic = true;
        continue;
      }
      if (piece.empty()) throw UsageError("custom: empty coefficient");
      coeffs.push_back(Rational::parse(piece));
    }
    if (coeffs.empty()) throw UsageError("custom: no coefficients");
    if (out.cyclic) {
      std::size_t base = coeffs.size();
      while (coeffs.size() < cyclic_fill) coeffs.push_back(coeffs[coeffs.size() % base]);
    }
    out.spec = SeriesSpec::custom(std::move(coeffs), x);
  } else {
    throw UsageError("unknown series: " + name);
  }
  return out;
}

summa::CurveSpec parse_curve(const std::string& name) {
  if (name == "v1") return summa::CurveSpec::v1();
  if (name == "v2") return summa::CurveSpec::v2();
  if (name == "oddfact") return summa::CurveSpec::odd_fact();
  throw UsageError("unknown curve: " + name + " (expected v1, v2, oddfact)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += "\"";
  return quoted;
}

json report_to_json(const summa::RunReport& rep) {
  json j;
  j["section"] = rep.section;
  json targets = json::array();
  for (const auto& t : rep.targets) {
    json jt;
    jt["name"] = t.name;
    jt["paper"] = t.paper;
    jt["computed"] = t.computed;
    jt["diff"] = t.diff;
    jt["tolerance_class"] = summa::tolerance_class_name(t.tolerance_class);
    jt["pass"] = t.pass;
    if (!t.note.empty()) jt["note"] = t.note;
    targets.push_back(jt);
  }
  j["targets"] = targets;
  j["exact_matches"] = rep.exact_matches;
  return j;
}

int run_sum(const std::string& series, const std::string& method, int digits, std::size_t depth,
            bool depth_given, const std::string& format) {
  ParsedSeries ps = parse_series(series, std::max<std::size_t>(depth, 24));
  if (!depth_given && ps.spec.family == SeriesFamily::kOddDoubleFactorial)
    depth = 11;  // the worked table's own cut; factorial keeps the 41-level default
  json j;
  j["series"] = series;
  j["method"] = method;

  auto emit = [&](const std::string& value_line) {
    if (format == "json") {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << value_line << "\n";
      // the method's internal report, kept off stdout
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "value")
          std::cerr << "  " << it.key() << ": " << (it->is_string() ? it->get<std::string>()
                                                                    : it->dump())
                    << "\n";
    }
  };

  if (method == "euler") {
    if (ps.spec.family == SeriesFamily::kGeometric) {
      Rational v = summa::geometric_value(ps.spec.ratio);
      j["value"] = v.to_string();
      j["exact"] = true;
      j["digits"] = digits;
      emit(v.to_string());
      return 0;
    }
    std::size_t n = depth;
    if (ps.spec.family == SeriesFamily::kCustom && ps.spec.coefficients.size() < n)
      n = ps.spec.coefficients.size();
    summa::TermSequence t = summa::terms(ps.spec, n);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      bool ok = (i % 2 == 0) ? t.values[i].signum() > 0 : t.values[i].signum() < 0;
      if (!ok)
        throw std::domain_error("euler: series is not alternating with leading +");
    }
    std::vector<Rational> mags;
    for (const auto& v : t.values) mags.push_back(v.abs());
    summa::ExtrapolationReport rep = summa::euler_transform_sum(mags);
    j["value"] = rep.exact ? rep.value_exact.to_string() : rep.value.rounded(digits).to_string();
    j["exact"] = rep.exact;
    j["terms_used"] = rep.terms_used;
    j["truncation_bound"] = rep.truncation_bound.to_string();
    j["digits"] = digits;
    emit(rep.exact ? rep.value_exact.to_string() : rep.value.rounded(digits).to_string());
    return 0;
  }

  if (method == "extrapolate") {
    std::vector<Rational> table;
    if (ps.spec.family == SeriesFamily::kFactorial && ps.spec.point_x == Rational(1)) {
      for (const auto& a : summa::auxiliary_factorial_table(std::max<std::size_t>(depth, 13)))
        table.push_back(a.reciprocal());
    } else if (ps.spec.family == SeriesFamily::kCustom) {
      table = ps.spec.coefficients;
    } else {
      throw UsageError("extrapolate: supported for factorial@x=1 and custom tables");
    }
    summa::ExtrapolationReport rep = summa::newton_extrapolate_zero(table);
    BigFloat value = rep.value;
    if (ps.spec.family == SeriesFamily::kFactorial)
      value = BigFloat::div(BigFloat(1), rep.value, digits + 4);
    j["value"] = value.rounded(digits).to_string();
    j["extrapolated_at_zero"] = rep.value.rounded(digits).to_string();
    j["terms_used"] = rep.terms_used;
    j["truncation_bound"] = rep.truncation_bound.to_string();
    j["digits"] = digits;
    emit(value.rounded(digits).to_string());
    return 0;
  }

  if (method == "cf") {
    BigFloat v = summa::sum_by_cf_closure(ps.spec, depth, digits);
    j["value"] = v.rounded(digits).to_string();
    j["depth"] = depth;
    j["digits"] = digits;
    emit(v.rounded(digits).to_string());
    return 0;
  }

  if (method == "quadrature") {
    summa::CurveSpec curve;
    if (ps.spec.family == SeriesFamily::kFactorial && ps.spec.point_x == Rational(1))
      curve = summa::CurveSpec::v1();
    else if (ps.spec.family == SeriesFamily::kOddDoubleFactorial && ps.spec.point_x == Rational(1))
      curve = summa::CurveSpec::odd_fact();
    else
      throw UsageError("quadrature: supported for factorial@x=1 and oddfact@x=1");
    BigFloat tol(summa::BigInt(1), -(digits + 2));
    summa::QuadratureResult res = summa::adaptive_integral(curve, tol);
    j["value"] = res.value.rounded_at(digits).to_string();
    j["error_estimate"] = res.error_estimate.to_string();
    j["evaluations"] = res.evaluations;
    j["digits"] = digits;
    emit(res.value.rounded_at(digits).to_string());
    return 0;
  }

  throw UsageError("unknown method: " + method);
}

int run_table(const std::string& kind, const std::string& spec_text, std::size_t depth,
              std::size_t count, std::size_t rounds, std::size_t panels, int digits) {
  if (kind == "differences") {
    ParsedSeries ps = parse_series(spec_text, depth + 2);
    summa::TermSequence t = summa::terms(
        ps.spec, ps.spec.family == SeriesFamily::kCustom ? ps.spec.coefficients.size() : count);
    std::vector<Rational> values;
    for (const auto& v : t.values) values.push_back(v.abs());
    summa::DifferenceTable table = summa::difference_table(values, depth);
    std::cout << "row,index,value\r\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
      for (std::size_t i = 0; i < table.rows[r].size(); ++i)
        std::cout << r << "," << i << "," << csv_field(table.rows[r][i].to_string()) << "\r\n";
    return 0;
  }

  if (kind == "convergents") {
    ParsedSeries ps = parse_series(spec_text, count + 2);
    summa::EulerCF cf;
    if (ps.spec.family == SeriesFamily::kFactorial) {
      cf = summa::hypergeometric_cf(1, 1, count + 2);
    } else if (ps.spec.family == SeriesFamily::kOddDoubleFactorial) {
      cf.leading = 1;
      cf.leading_power = 1;
      cf.power = 2;
      for (std::size_t i = 1; i <= count + 2; ++i)
        cf.numerators.push_back(Rational(static_cast<std::int64_t>(i)));
    } else if (ps.spec.family == SeriesFamily::kHypergeometric) {
      cf = summa::hypergeometric_cf(ps.spec.p, ps.spec.q, count + 2);
    } else {
      throw UsageError("convergents: unsupported family");
    }
    auto conv = summa::convergents(cf, ps.spec.point_x, count);
    std::cout << "index,p,q,side,decimal\r\n";
    for (const auto& c : conv) {
      BigFloat dec = BigFloat::from_rational(Rational(c.p, c.q), digits + 4);
      std::cout << c.index << "," << c.p.to_string() << "," << c.q.to_string() << ","
                << (c.side == summa::ConvergentPair::Side::kLower ? "lower" : "upper") << ","
                << dec.to_fixed(digits) << "\r\n";
    }
    return 0;
  }

  if (kind == "means") {
    ParsedSeries ps = parse_series(spec_text, count + 2);
    summa::EulerCF cf = summa::hypergeometric_cf(
        ps.spec.family == SeriesFamily::kHypergeometric ? ps.spec.p : Rational(1),
        ps.spec.family == SeriesFamily::kHypergeometric ? ps.spec.q : Rational(1), count + 2);
    auto conv = summa::convergents(cf, ps.spec.point_x, count);
    std::vector<BigFloat> decs;
    for (const auto& c : conv)
      decs.push_back(BigFloat::from_rational(Rational(c.p, c.q), digits + 6).rounded_at(digits));
    auto table = summa::interleave_means(decs, rounds);
    std::cout << "round,index,value\r\n";
    for (std::size_t r = 0; r < table.size(); ++r)
      for (std::size_t i = 0; i < table[r].size(); ++i)
        std::cout << r << "," << i << "," << table[r][i].to_fixed(digits) << "\r\n";
    return 0;
  }

  if (kind == "ordinates") {
    summa::CurveSpec curve = parse_curve(spec_text);
    std::vector<Rational> grid;
    for (std::size_t k = 0; k <= panels; ++k)
      grid.push_back(Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(panels)));
    auto ys = summa::ordinates(curve, grid, digits + 4);
    std::cout << "index,x,y,addend\r\n";
    for (std::size_t k = 0; k <= panels; ++k) {
      BigFloat weighted = summa::BigFloat::div(ys[k], BigFloat(static_cast<std::int64_t>(panels)),
                                               digits + 4);
      if (k == 0 || k == panels) weighted = weighted.halved();
      std::cout << k << "," << csv_field(grid[k].to_string()) << "," << ys[k].to_fixed(digits)
                << "," << weighted.to_fixed(digits) << "\r\n";
    }
    return 0;
  }

  throw UsageError("unknown table kind: " + kind);
}

int run_reproduce(const std::string& section, const std::string& format) {
  std::vector<summa::RunReport> reports;
  if (section == "all") {
    reports = summa::reproduce_all();
  } else {
    reports.push_back(summa::reproduce_section(section));
  }

  bool all_pass = true;
  for (const auto& rep : reports)
    if (!rep.ok()) all_pass = false;

  if (format == "json") {
    if (reports.size() == 1) {
      std::cout << report_to_json(reports[0]).dump() << "\n";
    } else {
      json arr = json::array();
      for (const auto& rep : reports) arr.push_back(report_to_json(rep));
      std::cout << arr.dump() << "\n";
    }
  } else {
    for (const auto& rep : reports) {
      std::cout << "== " << rep.section << " ==\n";
      for (const auto& t : rep.targets) {
        std::cout << (t.pass ? "  ok   " : "  FAIL ") << t.name << ": " << t.computed;
        if (!t.pass) std::cout << " (expected " << t.paper << ")";
        if (!t.note.empty()) std::cout << "  [" << t.note << "]";
        std::cout << "\n";
      }
      std::cout << "  exact matches: " << rep.exact_matches << "/" << rep.targets.size() << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"summa: divergent-series summation by difference tables, extrapolation,\n"
               "continued fractions, and integral representations"};
  app.require_subcommand(1);

  std::string series, method = "cf", format = "text";
  int digits = 10;
  std::size_t depth = 41;
  auto* sum = app.add_subcommand("sum", "sum a series by the chosen method");
  sum->add_option("series", series, "series spec, e.g. factorial@x=1")->required();
  sum->add_option("--method", method, "euler | extrapolate | cf | quadrature");
  sum->add_option("--digits", digits, "output digit budget");
  sum->add_option("--depth", depth, "terms / levels consumed");
  sum->add_option("--format", format, "text | json");

  std::string kind, tspec;
  std::size_t count = 10, rounds = 1, panels = 10;
  std::size_t tdepth = 2;
  int tdigits = 10;
  auto* table = app.add_subcommand("table", "emit difference/convergent/mean/ordinate tables as CSV");
  table->add_option("kind", kind, "differences | convergents | means | ordinates")->required();
  table->add_option("spec", tspec, "series spec or curve name")->required();
  table->add_option("--depth", tdepth, "difference depth");
  table->add_option("--count", count, "convergent count / term count");
  table->add_option("--rounds", rounds, "mean rounds");
  table->add_option("--panels", panels, "ordinate grid panels");
  table->add_option("--digits", tdigits, "decimal digits in the output");

  std::string section, rformat = "text";
  auto* repro = app.add_subcommand("reproduce", "rerun a section against its printed values");
  repro->add_option("section", section, "s15 s16 s17 s18 s19 s22 s25 s29 | all")->required();
  repro->add_option("--format", rformat, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sum->parsed())
      return run_sum(series, method, digits, depth, sum->count("--depth") > 0, format);
    if (table->parsed()) return run_table(kind, tspec, tdepth, count, rounds, panels, tdigits);
    if (repro->parsed()) return run_reproduce(section, rformat);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // breakdowns inside a method: pole, non-alternating input, zero pivot
    std::cerr << "breakdown: " << e.what() << "\n";
    return kExitBreakdown;
  }
  return kExitUsage;
}
