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

#include <algorithm>
#include <bit>

#include "noisebound/circuit.hpp"
#include "noisebound/io.hpp"
#include "oracles.hpp"

using namespace noisebound;

namespace {

GatePlacement place(std::vector<int> wires, Builtin b) { return GatePlacement{std::move(wires), GateSpec(b)}; }

Circuit single_cnot() { return Circuit(2, {{place({0, 1}, Builtin::CNOT)}}, NoiseModel{}, 0); }

void check_against_closure(const Circuit& c, int max_size) {
  const int n = c.num_qubits();
  const int bits = n * (c.num_levels() + 1);
  const std::vector<char> truth = oracle::consistent_closure(c);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    if (std::popcount(m) > max_size) continue;
    const auto refs = oracle::refs_of_mask(m, n);
    REQUIRE(is_consistent(refs, c) == static_cast<bool>(truth[m]));
    if (truth[m]) expected.push_back(m);
  }
  std::vector<std::uint64_t> got;
  for (const ConsistentSet& s : enumerate_consistent_sets(c, max_size)) got.push_back(oracle::mask_of_refs(s.qubits, n));
  std::sort(got.begin(), got.end());
  CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
  CHECK(got == expected);
}

}  // namespace

TEST_CASE("noise model validation") {
  CHECK_NOTHROW(validate_noise({0.1, 0.4}));
  CHECK_THROWS_AS(validate_noise({0.0, 0.4}), CircuitError);
  CHECK_THROWS_AS(validate_noise({0.1, 1.5}), CircuitError);
  CHECK_THROWS_AS(validate_noise({1.2, 0.4}), CircuitError);
}

TEST_CASE("circuit construction checks partitions") {
  CHECK_NOTHROW(single_cnot());
  CHECK_THROWS_AS(Circuit(2, {{place({0}, Builtin::H)}}, NoiseModel{}, 0), CircuitError);
  CHECK_THROWS_AS(Circuit(2, {{place({0}, Builtin::H), place({0}, Builtin::H)}}, NoiseModel{}, 0), CircuitError);
  CHECK_THROWS_AS(Circuit(2, {{place({0, 1}, Builtin::H)}}, NoiseModel{}, 0), CircuitError);
  CHECK_THROWS_AS(Circuit(2, {{place({0, 2}, Builtin::CNOT)}}, NoiseModel{}, 0), CircuitError);
  CHECK_THROWS_AS(Circuit(2, {{place({0, 1}, Builtin::CNOT)}}, NoiseModel{}, 5), CircuitError);
  CHECK_THROWS_AS(Circuit(2, {{place({0, 1}, Builtin::CNOT)}}, NoiseModel{}, 0, 1), CircuitError);

  const Circuit c = single_cnot();
  CHECK(c.k_max() == 2);
  CHECK(c.gate_at(1, 1).index == 0);
  CHECK(c.has_multi_qubit_gates());
  CHECK(c.multi_qubit_gates_are_cnot());
  CHECK(c.prefix(0).num_levels() == 0);
}

TEST_CASE("consistency examples") {
  const Circuit c = single_cnot();
  const std::vector<QubitRef> time0 = {{0, 0}, {1, 0}};
  CHECK(is_consistent(time0, c));
  const std::vector<QubitRef> across = {{0, 0}, {0, 1}};
  CHECK_FALSE(is_consistent(across, c));
  const std::vector<QubitRef> half = {{0, 0}, {1, 1}};
  CHECK_FALSE(is_consistent(half, c));
  const std::vector<QubitRef> after = {{0, 1}, {1, 1}};
  CHECK(is_consistent(after, c));
  const std::vector<QubitRef> bad = {{0, 5}};
  CHECK_THROWS(is_consistent(bad, c));

  const Circuit ids(2, {{place({0}, Builtin::ID), place({1}, Builtin::ID)}}, NoiseModel{}, 0);
  const std::vector<QubitRef> mixed = {{0, 0}, {1, 1}};
  CHECK(is_consistent(mixed, ids));
  CHECK(apply_closure(ids, mixed).size() == 1);
}

TEST_CASE("dist and latest") {
  const std::vector<QubitRef> v = {{0, 1}, {1, 3}};
  const DistLatest dl = dist_latest(v);
  CHECK(dl.dist == 1);
  CHECK(dl.latest == 3);
  CHECK_FALSE(dist_latest(std::vector<QubitRef>{}).dist.has_value());
  const std::vector<QubitRef> zero = {{0, 0}, {1, 0}};
  CHECK(dist_latest(zero, single_cnot()).dist == 0);
}

TEST_CASE("enumeration examples") {
  const Circuit empty(1, {}, NoiseModel{}, 0);
  const auto sets = enumerate_consistent_sets(empty, 1);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].qubits.empty());
  CHECK_FALSE(sets[0].dist.has_value());
  CHECK(sets[1].qubits == std::vector<QubitRef>{{0, 0}});

  const auto only_empty = enumerate_consistent_sets(single_cnot(), 0);
  REQUIRE(only_empty.size() == 1);
  CHECK(only_empty[0].qubits.empty());

  CHECK(enumerate_consistent_sets(single_cnot(), 2).size() == 7);
  check_against_closure(single_cnot(), 2);
  CHECK_THROWS_AS(enumerate_consistent_sets(single_cnot(), 2, 3), BudgetExceeded);
}

TEST_CASE("enumeration order follows latest, count at latest, then refs") {
  const std::vector<std::string> pool = {"CNOT", "H", "ID"};
  const Circuit c = random_circuit(3, 2, 41, pool, 2);
  const auto sets = enumerate_consistent_sets(c, 3);
  const auto key = [](const ConsistentSet& s) {
    const int count = static_cast<int>(
        std::count_if(s.qubits.begin(), s.qubits.end(), [&](const QubitRef& q) { return q.time == s.latest; }));
    return std::make_tuple(s.qubits.empty() ? -1 : s.latest, count, s.qubits);
  };
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(key(sets[i - 1]) < key(sets[i]));
}

TEST_CASE("consistency agrees with the inductive closure") {
  const std::vector<std::string> pool = {"CNOT", "H", "ID", "RANDU3"};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Circuit c = random_circuit(3, 2, seed, pool, 3);
    check_against_closure(c, 4);
  }
}

TEST_CASE("subsets of consistent sets stay consistent and dist never grows") {
  const std::vector<std::string> pool = {"CNOT", "H", "RESET"};
  const Circuit c = random_circuit(3, 3, 5, pool, 2);
  for (const ConsistentSet& s : enumerate_consistent_sets(c, 4)) {
    for (std::size_t drop = 0; drop < s.qubits.size(); ++drop) {
      std::vector<QubitRef> sub = s.qubits;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(is_consistent(sub, c));
      const auto d = dist_latest(sub).dist;
      CHECK((!d || !s.dist || *d >= *s.dist));
    }
  }
}

TEST_CASE("random circuits") {
  const std::vector<std::string> pool = {"CNOT", "H", "ID"};
  CHECK(circuit_to_json(random_circuit(4, 3, 7, pool, 2)) == circuit_to_json(random_circuit(4, 3, 7, pool, 2)));
  CHECK_FALSE(random_circuit(4, 3, 7, pool, 2) == random_circuit(4, 3, 8, pool, 2));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = random_circuit(3, 4, seed, pool, 2);
    for (int t = 1; t <= c.num_levels(); ++t) {
      std::vector<int> hits(3, 0);
      for (const GatePlacement& g : c.level(t))
        for (int w : g.wires) ++hits[static_cast<std::size_t>(w)];
      CHECK(hits == std::vector<int>{1, 1, 1});
    }
  }
  const std::vector<std::string> cnot_only = {"CNOT"};
  CHECK_THROWS(random_circuit(3, 1, 1, cnot_only, 2));
  CHECK_THROWS(random_circuit(1, 1, 1, cnot_only, 2));
  CHECK_THROWS(random_circuit(3, 1, 1, pool, 1));
  const std::vector<std::string> unknown = {"FOO"};
  CHECK_THROWS(random_circuit(2, 1, 1, unknown, 2));
}
