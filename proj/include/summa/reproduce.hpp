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

#ifndef SUMMA_REPRODUCE_HPP
#define SUMMA_REPRODUCE_HPP

#include <string>
#include <vector>

#include "summa/bigfloat.hpp"

namespace summa {

// How a manifest target is judged:
//   kExact   - exact rational/integer/string equality
//   kPrinted - match the source table's printed digits (at its own grain)
//   kOracle  - agree with an independently computed value to a stated bound
//   kBound   - a one-sided or structural condition
enum class ToleranceClass { kExact, kPrinted, kOracle, kBound };

const char* tolerance_class_name(ToleranceClass c);

struct Target {
  std::string name;
  std::string paper;     // the printed value (recomputed digits where noted)
  std::string computed;
  std::string diff;      // |computed - paper| where meaningful, else ""
  ToleranceClass tolerance_class = ToleranceClass::kExact;
  bool pass = false;
  std::string note;      // set where the printed digits are demonstrable misprints
};

struct RunReport {
  std::string section;
  std::vector<Target> targets;
  std::size_t exact_matches = 0;

  bool ok() const {
    for (const auto& t : targets)
      if (!t.pass) return false;
    return true;
  }
};

std::vector<std::string> reproduce_section_names();  // s15 ... s29
RunReport reproduce_section(const std::string& name);
std::vector<RunReport> reproduce_all();

}  // namespace summa

#endif  // SUMMA_REPRODUCE_HPP
