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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "noisebound/channels.hpp"

namespace noisebound {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// eps1-depolarizing noise follows every one-qubit gate; epsk-depolarizing
/// noise precedes every input of every multi-qubit gate.
struct NoiseModel {
  double eps1 = 0.1;
  double epsk = 0.4;

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// Throws CircuitError unless eps1 is in (0, 1] and epsk in [0, 1].
void validate_noise(const NoiseModel& noise);

struct GatePlacement {
  std::vector<int> wires;
  GateSpec gate;

  friend bool operator==(const GatePlacement&, const GatePlacement&) = default;
};

/// Gate identity: level in 1..T and position within that level.
struct GateId {
  int level = 0;
  int index = 0;

  friend auto operator<=>(const GateId&, const GateId&) = default;
};

/// Leveled circuit: every level partitions the wires into gate placements.
class Circuit {
 public:
  using Level = std::vector<GatePlacement>;

  /// Validates the partition, arities and noise. `k_max` of 0 infers the
  /// largest gate arity present (at least 1).
  Circuit(int n, std::vector<Level> levels, NoiseModel noise, int output_wire, int k_max = 0);

  int num_qubits() const { return n_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }
  int k_max() const { return k_max_; }
  int output_wire() const { return output_; }
  const NoiseModel& noise() const { return noise_; }

  const std::vector<Level>& levels() const { return levels_; }
  /// 1-based level access.
  const Level& level(int t) const { return levels_.at(static_cast<std::size_t>(t - 1)); }
  const GatePlacement& placement(GateId id) const;
  /// Gate covering `wire` at level t (1-based).
  GateId gate_at(int t, int wire) const;

  /// The first `t` levels, same noise and output.
  Circuit prefix(int t) const;
  Circuit with_noise(NoiseModel noise) const;

  bool has_multi_qubit_gates() const;
  /// True when every multi-qubit gate is the CNOT builtin.
  bool multi_qubit_gates_are_cnot() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_ = 0;
  std::vector<Level> levels_;
  NoiseModel noise_;
  int output_ = 0;
  int k_max_ = 1;
  std::vector<std::vector<int>> owner_;  // owner_[level-1][wire] -> placement index
};

/// A wire at a time in 0..T; ordered by time, then wire.
struct QubitRef {
  int wire = 0;
  int time = 0;

  friend bool operator==(const QubitRef&, const QubitRef&) = default;
  friend std::strong_ordering operator<=>(const QubitRef& a, const QubitRef& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    return a.wire <=> b.wire;
  }
};

struct DistLatest {
  std::optional<int> dist;  // nullopt encodes infinity (empty set)
  int latest = 0;
};

struct ConsistentSet {
  std::vector<QubitRef> qubits;  // sorted, distinct
  std::optional<int> dist;
  int latest = 0;

  friend bool operator==(const ConsistentSet&, const ConsistentSet&) = default;
};

/// Gates needed to produce the qubits of V: the closure over gate inputs.
std::vector<GateId> apply_closure(const Circuit& c, std::span<const QubitRef> v);

/// True iff no gate in apply_closure(V) consumes a member of V.
bool is_consistent(std::span<const QubitRef> v, const Circuit& c);

DistLatest dist_latest(std::span<const QubitRef> v);
DistLatest dist_latest(std::span<const QubitRef> v, const Circuit& c);

/// Sorts, de-duplicates and checks consistency; throws CircuitError otherwise.
ConsistentSet make_consistent_set(std::vector<QubitRef> v, const Circuit& c);

/// Every consistent set with at most `max_size` qubits, each once, ordered by
/// latest time, then the number of qubits at that time, then the refs.
/// Throws BudgetExceeded when more than `cap` sets would be produced.
std::vector<ConsistentSet> enumerate_consistent_sets(const Circuit& c, int max_size,
                                                     std::size_t cap = 1'000'000);

/// Gate pool entries: builtin names, RANDU<k> (Haar unitary), RANDMIX<k>
/// (mixture of 2-3 Haar unitaries) and RANDRSW (random RSW channel).
Circuit random_circuit(int n, int levels, std::uint64_t seed, std::span<const std::string> pool, int k,
                       NoiseModel noise = {});

}  // namespace noisebound
