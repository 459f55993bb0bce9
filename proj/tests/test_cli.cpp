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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SUMMA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string strip(const std::string& s) {
  std::size_t end = s.find_last_not_of(" \n\r\t");
  std::size_t begin = s.find_first_not_of(" \n\r\t");
  if (begin == std::string::npos) return "";
  return s.substr(begin, end - begin + 1);
}

}  // namespace

TEST_CASE("sum of the doubling geometric series") {
  RunResult r = run("sum geometric:r=2 --method euler");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.output) == "-1");
}

TEST_CASE("sum of the alternating unit series") {
  RunResult r = run("sum \"custom:[1,-1,1,-1,...]@x=1\" --method euler");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.output) == "1/2");
}

TEST_CASE("sum of the factorial series by fraction closure") {
  RunResult r = run("sum factorial@x=1 --method cf --digits 10");
  CHECK(r.exit_code == 0);
  CHECK(strip(r.output) == "0.5963473621");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("sum nosuch@x=1 --method euler").exit_code == 2);
  CHECK(run("sum factorial@x=1 --method nosuch").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
}

TEST_CASE("method breakdowns exit with 3") {
  // geometric_value has a pole at ratio 1
  CHECK(run("sum geometric:r=1 --method euler").exit_code == 3);
  // the euler transform rejects a non-alternating series
  CHECK(run("sum \"custom:[1,1,1,1]@x=1\" --method euler").exit_code == 3);
}

TEST_CASE("difference table as csv") {
  RunResult r = run("table differences \"custom:[1,4,9,16,25]@x=1\" --depth 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("row,index,value", 0) == 0);
  CHECK(r.output.find("1,0,3") != std::string::npos);
  CHECK(r.output.find("1,3,9") != std::string::npos);
  CHECK(r.output.find("2,0,2") != std::string::npos);
  CHECK(r.output.find("2,2,2") != std::string::npos);
}

TEST_CASE("convergent table as csv") {
  RunResult r = run("table convergents factorial@x=1 --count 10 --digits 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("index,p,q,side,decimal", 0) == 0);
  CHECK(r.output.find("6,20,34,lower,0.5882352941") != std::string::npos);
  CHECK(r.output.find("9,300,501,upper,0.5988023952") != std::string::npos);
}

TEST_CASE("ordinate table as csv") {
  RunResult r = run("table ordinates v1 --panels 10 --digits 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("index,x,y,addend", 0) == 0);
  CHECK(r.output.find("1,1/10,0.00123410,0.00012341") != std::string::npos);
  CHECK(r.output.find("5,1/2,0.73575888,0.07357589") != std::string::npos);
}

TEST_CASE("reproduce emits a machine-readable report and round-trips byte-identically") {
  RunResult r = run("reproduce s22 --format json");
  CHECK(r.exit_code == 0);
  std::string text = strip(r.output);
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed["section"] == "s22");
  CHECK(parsed["targets"].is_array());
  CHECK(parsed["targets"].size() > 20);
  for (const auto& t : parsed["targets"]) {
    CHECK(t.contains("name"));
    CHECK(t.contains("paper"));
    CHECK(t.contains("computed"));
    CHECK(t.contains("diff"));
    CHECK(t.contains("tolerance_class"));
    CHECK(t["pass"].is_boolean());
  }
  CHECK(parsed.dump() == text);
}

TEST_CASE("reproduce sections pass") {
  for (const char* sec : {"s15", "s16", "s17", "s18", "s19", "s22", "s25", "s29"}) {
    RunResult r = run(std::string("reproduce ") + sec);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("sum emits json that round-trips byte-identically") {
  RunResult r = run("sum factorial@x=1 --method cf --digits 10 --format json");
  CHECK(r.exit_code == 0);
  std::string text = strip(r.output);
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed["value"] == "0.5963473621");
  CHECK(parsed.dump() == text);
}

TEST_CASE("mean rounds as csv") {
  RunResult r = run("table means factorial@x=1 --count 10 --rounds 2 --digits 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("round,index,value", 0) == 0);
  CHECK(r.output.find("1,0,0.5000000000") != std::string::npos);
  CHECK(r.output.find("1,8,0.5960519153") != std::string::npos);
  CHECK(r.output.find("2,0,0.6250000000") != std::string::npos);
}
