// Copyright 2026 The noisebound Authors
//
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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = noisebound::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(NOISEBOUND_TEST_DIR) + "/data/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("threshold command") {
  Result r = run({"threshold", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "general,2,0.356406"));
  r = run({"threshold", "--k", "2", "--cnot-only"});
  CHECK(contains(r.out, "cnot,2,0.292893"));
  r = run({"threshold", "--k", "1"});
  CHECK(contains(r.out, "general,1,0.000000"));
  r = run({"threshold", "--k", "0"});
  CHECK(r.code == 2);
  r = run({"--format", "json", "threshold", "--k", "3"});
  CHECK(std::abs(nlohmann::json::parse(r.out)["epsk_threshold"].get<double>() - 0.490175) < 1e-6);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"threshold", "--k", "two"}).code == 2);
  CHECK(run({"--format", "xml", "threshold"}).code == 2);
  CHECK(run({"decay"}).code == 2);
  CHECK(run({"decay", "--random", "n=2,T=3"}).code == 2);  // no seed
  CHECK(run({"decay", "--circuit", data("missing.nbc")}).code == 2);
  CHECK(run({"decay", "--circuit", data("id_chain.nbc"), "--T-range", "5:2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("decay on an identity chain") {
  const Result r = run({"decay", "--circuit", data("id_chain.nbc")});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "T,measured,bound");
  CHECK(rows[10].rfind("10,0.904382075009,", 0) == 0);
  for (int t = 1; t <= 10; ++t) {
    const double measured = std::stod(rows[static_cast<std::size_t>(t)].substr(rows[static_cast<std::size_t>(t)].find(',') + 1));
    CHECK(std::abs(measured - std::pow(0.99, t)) < 1e-11);
  }
}

TEST_CASE("decay on a random feasible circuit") {
  const Result r = run({"--seed", "7", "decay", "--random", "n=3,T=12,eps1=0.1,epsk=0.45", "--T-range", "1:12"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 13);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double measured = 0, bound = 0;
    int t = 0;
    REQUIRE(std::sscanf(rows[i].c_str(), "%d,%lf,%lf", &t, &measured, &bound) == 3);
    CHECK(measured <= bound + 1e-9);
  }
}

TEST_CASE("decay refuses infeasible noise") {
  const std::string spec = "n=3,T=5,pool=CNOT:H,eps1=0.1,epsk=0.30,k=2";
  Result r = run({"--seed", "7", "decay", "--random", spec, "--theta-mode", "general"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "(1+μ²)^k ≤ 2θ"));
  CHECK(r.out.empty());
  // Only CNOTs, so the default mode applies the sharper constraint.
  CHECK(run({"--seed", "7", "decay", "--random", spec}).code == 0);
  r = run({"--seed", "7", "decay", "--random", "n=3,T=5,pool=RANDMIX2:H,eps1=0.1,epsk=0.30"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "(1+μ²)^k ≤ 2θ"));
}

TEST_CASE("identical command lines give identical files") {
  const std::string a = "noisebound_cli_a.csv", b = "noisebound_cli_b.csv";
  const std::vector<std::string> base = {"--seed", "11", "--jobs", "1", "decay", "--random", "n=4,T=6,epsk=0.5"};
  std::vector<std::string> first = base, second = base;
  first.insert(first.begin(), {"--out", a});
  second.insert(second.begin(), {"--out", b});
  second[5] = "4";  // --jobs 4
  CHECK(run(first).code == 0);
  CHECK(run(second).code == 0);
  CHECK(!slurp(a).empty());
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("check-invariant") {
  Result r = run({"--format", "json", "check-invariant", "--circuit", data("cnot_pair.nbc"), "--max-set-size", "3"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "audit");
  CHECK(j["all_pass"] == true);
  CHECK(j["sets"].get<int>() > 1);
  CHECK(j.contains("min_margin"));

  r = run({"--format", "json", "check-invariant", "--circuit", data("cnot_pair.nbc"), "--max-set-size", "0"});
  j = nlohmann::json::parse(r.out);
  CHECK(r.code == 0);
  CHECK(j["sets"] == 1);
  CHECK(j["records"][0]["qubits"].empty());

  r = run({"check-invariant", "--circuit", data("cnot_pair.nbc"), "--epsk", "0.2"});
  CHECK(r.code == 2);

  r = run({"--format", "json", "check-invariant", "--circuit", data("cnot_pair.nbc"), "--epsk", "0.05", "--theta",
           "0.99"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "warning"));
  CHECK(nlohmann::json::parse(r.out)["mode"] == "exploratory");

  r = run({"check-invariant", "--circuit", data("cnot_pair.nbc"), "--cap", "2"});
  CHECK(r.code == 2);
}

TEST_CASE("verify command") {
  Result r = run({"verify", "--cases", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "engine-equivalence: 0/0 ok"));
  r = run({"--seed", "3", "verify", "--cases", "10"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "all suites pass"));
  r = run({"verify", "--cases", "0", "--circuit", data("bad_mixture.nbc")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "probabilities"));
  CHECK(run({"decay", "--circuit", data("bad_mixture.nbc")}).code == 2);
}

TEST_CASE("cnot-table command") {
  const Result r = run({"cnot-table"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[1] == "II,II,+1,identity,identity,match");
  CHECK(contains(r.out, "\nXI,XX,+1,"));
  CHECK(contains(r.out, "\nIZ,ZZ,+1,"));
  CHECK(contains(r.out, "\nYY,XZ,-1,"));
  CHECK_FALSE(contains(r.out, "target-only,control-only"));
  CHECK_FALSE(contains(r.out, "control-only,target-only"));
}

TEST_CASE("simulate command") {
  Result r = run({"simulate", "--circuit", data("id_chain.nbc")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,10,0.904382075009,"));
  r = run({"simulate", "--circuit", data("id_chain.nbc"), "--pair", "0,0"});
  CHECK(contains(r.out, "1,10,0,"));
  r = run({"--seed", "2", "simulate", "--circuit", data("cnot_pair.nbc"), "--trajectories", "50"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, ",sampled"));
  CHECK(run({"simulate", "--circuit", data("cnot_pair.nbc"), "--pair", "01"}).code == 2);
}
