/*
 * Copyright 2026 The spectra authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "spectra/cli.hpp"
#include "spectra/serialize.hpp"

using namespace spectra;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "spectra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the exact value with a decimal shadow") {
  Run r = run({"eval", "--seq", "per(2211)"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["markov_value"]["value"]["exact"] == "√221/5");
  CHECK(j["markov_value"]["value"]["decimal"].get<std::string>().starts_with("2.9732137"));
  CHECK(j["markov_value"]["value"]["precision"] == "30 digits");
  Run t = run({"eval", "--seq", "per(ab)", "--format", "text", "--verify"});
  CHECK(t.code == 0);
  CHECK(t.out.find("√221/5 ~ 2.9732137") != std::string::npos);
  CHECK(t.out.find("verified: true") != std::string::npos);
}

TEST_CASE("sigma lists six words at t = 3, n = 3") {
  Run r = run({"sigma", "--t", "3", "--n", "3", "--verify"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"]["In"] == 6);
  CHECK(j["verified"] == true);
  Run c = run({"sigma", "--t", "3", "--n", "3", "--format", "csv"});
  CHECK(c.out.starts_with("word,verdict,witness_period,refutation_depth\n"));
}

TEST_CASE("asym emits JSON") {
  Run r = run({"asym", "--rho", "6^-18"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d_asymptotic"].get<double>() > 0);
  CHECK(j["d_asymptotic"].get<double>() < 1);
  Run s = run({"asym", "--rho", "6^-3n", "--n-range", "2:4", "--format", "csv"});
  CHECK(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);
}

TEST_CASE("subcommands run") {
  CHECK(run({"interval", "--word", "22", "--verify"}).code == 0);
  CHECK(run({"alphabets", "--depth", "2", "--verify"}).code == 0);
  CHECK(run({"farey", "--n", "5", "--verify"}).code == 0);
  CHECK(run({"farey", "--theta", "2/5"}).out.find("aabab") != std::string::npos);
  CHECK(run({"renorm", "--word", "2211221111", "--step", "--verify"}).code == 0);
  CHECK(run({"cuts", "--cut", "2211|2211", "--verify"}).code == 0);
  CHECK(run({"cuts", "--cut", "2222|1111", "--verify"}).code == 0);
  CHECK(run({"cuts", "--scan", "2222111122", "--n", "4"}).code == 0);
  CHECK(run({"pushcut", "--cut", "ab|ab", "--kind", "good-symmetric", "--W", "UV", "--verify"}).code == 0);
  CHECK(run({"connect", "--kind", "ab", "--n", "4", "--verify"}).code == 0);
  CHECK(run({"dim", "--blocks", "1,2", "--power", "4", "--verify"}).code == 0);
  CHECK(run({"dim", "--blocks", "2211", "--certify", "--t", "3", "--verify"}).code == 0);
  CHECK(run({"dim", "--t", "3+6^-3n", "--m", "8", "--n-range", "2:3"}).code == 0);
  CHECK(run({"bound", "--rho", "e^-100"}).out.find("0.03077") != std::string::npos);
  CHECK(run({"verify-suite", "--only", "1,6"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"eval"}).code == kExitUsage);
  CHECK(run({"eval", "--seq", "per(3)"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"asym", "--rho", "2"}).code == kExitDomain);
  CHECK(run({"farey", "--theta", "3/2"}).code == kExitDomain);
  CHECK(run({"sigma", "--t", "3", "--word", "1111221122112222", "--node-limit", "1"}).code == kExitBudget);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"sigma", "--t", "3+6^-6", "--n", "8", "--workers", "3"};
  Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  std::vector<std::string> d{"dim", "--blocks", "1,2", "--power", "6"};
  CHECK(run(d).out == run(d).out);
  CHECK(run(d).out.find("elapsed") == std::string::npos);
  CHECK(run({"dim", "--blocks", "1,2", "--power", "3", "--timing"}).out.find("elapsed") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}
