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

#include "noisebound/bounds.hpp"
#include "noisebound/random.hpp"

using namespace noisebound;

TEST_CASE("thresholds") {
  CHECK(epsk_threshold(1) == 0.0);
  CHECK(std::abs(epsk_threshold(2) - 0.356406) < 1e-6);
  CHECK(std::abs(epsk_threshold(3) - 0.490175) < 1e-6);
  CHECK(std::abs(cnot_threshold() - 0.292893) < 1e-6);
  CHECK(cnot_threshold() < epsk_threshold(2));
  const double mu = 1.0 / std::sqrt(2.0);
  CHECK(std::abs((1 + mu * mu) / 2 + std::pow(mu, 4) - 1.0) < 1e-15);
  CHECK_THROWS(epsk_threshold(0));
  for (int k = 1; k < 8; ++k) {
    const double mu_k = 1.0 - epsk_threshold(k);
    CHECK(std::abs(std::pow(1 + mu_k * mu_k, k) - 2.0) < 1e-12);
  }
}

TEST_CASE("minimal theta") {
  const ThetaResult general = theta_for({0.1, 0.4}, 2, false);
  CHECK(general.theta == doctest::Approx(0.9248).epsilon(1e-12));
  CHECK(general.binding == Constraint::KGate);
  CHECK(general.feasible);

  const ThetaResult cnot = theta_for({0.1, 0.4}, 2, true);
  CHECK(cnot.theta == doctest::Approx(0.905).epsilon(1e-12));
  CHECK(cnot.binding == Constraint::OneQubit);
  REQUIRE(cnot.multi_qubit_term.has_value());
  CHECK(*cnot.multi_qubit_term == doctest::Approx(0.8096).epsilon(1e-12));

  const ThetaResult low = theta_for({0.1, 0.3}, 2, false);
  CHECK_FALSE(low.feasible);
  CHECK(low.theta == doctest::Approx(1.11005).epsilon(1e-12));
  CHECK(low.binding == Constraint::KGate);
  CHECK(constraint_formula(low.binding) == "(1+μ²)^k ≤ 2θ");

  CHECK_THROWS(theta_for({0.1, 0.4}, 3, true));
  CHECK_THROWS(theta_for({0.0, 0.4}, 2, false));
}

TEST_CASE("theta is monotone in both noise strengths") {
  for (bool cnot : {false, true}) {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const double e1 = 0.05 + 0.09 * i, ek = 0.09 * j;
        const double here = theta_for({e1, ek}, 2, cnot).theta;
        CHECK(theta_for({e1 + 0.05, ek}, 2, cnot).theta <= here);
        CHECK(theta_for({e1, ek + 0.05}, 2, cnot).theta <= here);
      }
    }
  }
}

TEST_CASE("CNOT constraint dominates the both-outputs requirement") {
  for (int i = 0; i <= 1000; ++i) {
    const double mu = i / 1000.0, x = mu * mu;
    CHECK((1 + x) / 2 + x * x >= (1 + x) * (1 + x) / 4);
  }
}

TEST_CASE("decay bound") {
  CHECK(decay_bound(0.5, 0) == 1.0);
  CHECK(decay_bound(0.81, 2) == doctest::Approx(0.81));
  // 0.9248^20 = 0.2093898...
  CHECK(std::abs(decay_bound(0.9248, 40) - 0.209390) < 1e-6);
}

TEST_CASE("sweep brackets the thresholds") {
  const std::vector<NoiseModel> general = {{0.1, 0.35}, {0.1, 0.36}};
  const auto g = sweep(general, 2, false);
  REQUIRE(g.size() == 2);
  CHECK_FALSE(g[0].result.feasible);
  CHECK(g[1].result.feasible);
  const std::vector<NoiseModel> cnot = {{0.1, 0.29}, {0.1, 0.30}};
  const auto c = sweep(cnot, 2, true);
  CHECK_FALSE(c[0].result.feasible);
  CHECK(c[1].result.feasible);
  CHECK(sweep(std::vector<NoiseModel>{}, 2, false).empty());
}

TEST_CASE("theta for whole circuits") {
  const std::vector<std::string> ones = {"H", "ID"};
  const Circuit single = random_circuit(2, 3, 1, ones, 1, NoiseModel{0.1, 0.0});
  const ThetaResult r = theta_for_circuit(single);
  CHECK(r.binding == Constraint::OneQubit);
  CHECK(r.theta == doctest::Approx(0.905));
  CHECK(r.feasible);

  const std::vector<std::string> cnots = {"CNOT", "H"};
  const Circuit cc = random_circuit(2, 3, 3, cnots, 2, NoiseModel{0.1, 0.3});
  CHECK(theta_for_circuit(cc).feasible);

  const std::vector<std::string> mixes = {"RANDMIX2", "H"};
  CHECK_FALSE(theta_for_circuit(random_circuit(2, 3, 3, mixes, 2, NoiseModel{0.1, 0.3})).feasible);
}

TEST_CASE("invariant checks") {
  Rng rng(3);
  const std::vector<std::string> pool = {"CNOT", "H", "T", "RESET", "RANDMIX2"};
  const Circuit c = random_circuit(3, 3, 12, pool, 2, NoiseModel{0.1, 0.4});
  const InputPair pair = InputPair::make(random_pure_density(rng, 3), random_pure_density(rng, 3));
  const double theta = theta_for_circuit(c).theta;

  const InvariantRecord empty = invariant_check(c, pair, make_consistent_set({}, c), theta);
  CHECK(empty.lhs == doctest::Approx(0.0));
  CHECK(empty.rhs == 0.0);
  CHECK(empty.pass);

  const InvariantRecord start = invariant_check(c, pair, make_consistent_set({{0, 0}, {2, 0}}, c), theta);
  CHECK(start.rhs == 2.0);
  CHECK(start.lhs <= 2.0 + 1e-9);
  CHECK(start.margin == doctest::Approx(start.rhs - start.lhs));

  const InvariantReport report = audit_invariant(CompiledCircuit(c), pair, theta, 3);
  CHECK(report.all_pass);
  CHECK(report.records.size() == enumerate_consistent_sets(c, 3).size());
  const InvariantReport parallel = audit_invariant(CompiledCircuit(c), pair, theta, 3, 1'000'000, 3);
  REQUIRE(parallel.records.size() == report.records.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(parallel.records[i].qubits == report.records[i].qubits);
    CHECK(parallel.records[i].lhs == report.records[i].lhs);
  }
}
