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

#include "noisebound/circuit.hpp"

#include <algorithm>
#include <string>

namespace noisebound {

void validate_noise(const NoiseModel& noise) {
  if (!(noise.eps1 > 0.0)) throw CircuitError("eps1 must be positive");
  if (!(noise.eps1 <= 1.0)) throw CircuitError("eps1 must not exceed 1");
  if (!(noise.epsk >= 0.0 && noise.epsk <= 1.0)) throw CircuitError("epsk must lie in [0, 1]");
}

Circuit::Circuit(int n, std::vector<Level> levels, NoiseModel noise, int output_wire, int k_max)
    : n_(n), levels_(std::move(levels)), noise_(noise), output_(output_wire) {
  if (n < 1) throw CircuitError("circuit needs at least one qubit");
  if (n > kMaxPauliQubits) throw CircuitError("circuit exceeds the " + std::to_string(kMaxPauliQubits) + "-qubit cap");
  if (output_wire < 0 || output_wire >= n) throw CircuitError("output wire out of range");
  if (k_max < 0) throw CircuitError("k must be non-negative");
  validate_noise(noise);

  int widest = 1;
  owner_.assign(levels_.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t t = 0; t < levels_.size(); ++t) {
    const std::string where = "level " + std::to_string(t + 1) + ": ";
    for (std::size_t i = 0; i < levels_[t].size(); ++i) {
      const GatePlacement& g = levels_[t][i];
      if (g.wires.empty()) throw CircuitError(where + "gate " + g.gate.name() + " has no wires");
      const int arity = g.gate.arity();
      if (arity != 0 && arity != static_cast<int>(g.wires.size()))
        throw CircuitError(where + "arity mismatch for gate " + g.gate.name() + ": expects " + std::to_string(arity) +
                           " wires, got " + std::to_string(g.wires.size()));
      for (int w : g.wires) {
        if (w < 0 || w >= n) throw CircuitError(where + "wire " + std::to_string(w) + " out of range");
        int& slot = owner_[t][static_cast<std::size_t>(w)];
        if (slot != -1) throw CircuitError(where + "wire " + std::to_string(w) + " used twice; not a partition");
        slot = static_cast<int>(i);
      }
      widest = std::max(widest, static_cast<int>(g.wires.size()));
    }
    for (int w = 0; w < n; ++w) {
      if (owner_[t][static_cast<std::size_t>(w)] == -1)
        throw CircuitError(where + "wire " + std::to_string(w) + " not covered; not a partition");
    }
  }
  k_max_ = k_max == 0 ? widest : k_max;
  if (widest > k_max_)
    throw CircuitError("gate arity " + std::to_string(widest) + " exceeds declared k=" + std::to_string(k_max_));
}

const GatePlacement& Circuit::placement(GateId id) const {
  return levels_.at(static_cast<std::size_t>(id.level - 1)).at(static_cast<std::size_t>(id.index));
}

GateId Circuit::gate_at(int t, int wire) const {
  if (t < 1 || t > num_levels()) throw std::out_of_range("Circuit::gate_at: level out of range");
  if (wire < 0 || wire >= n_) throw std::out_of_range("Circuit::gate_at: wire out of range");
  return GateId{t, owner_[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(wire)]};
}

Circuit Circuit::prefix(int t) const {
  if (t < 0 || t > num_levels()) throw std::out_of_range("Circuit::prefix: level count out of range");
  return Circuit(n_, std::vector<Level>(levels_.begin(), levels_.begin() + t), noise_, output_, k_max_);
}

Circuit Circuit::with_noise(NoiseModel noise) const { return Circuit(n_, levels_, noise, output_, k_max_); }

bool Circuit::has_multi_qubit_gates() const {
  for (const Level& level : levels_)
    for (const GatePlacement& g : level)
      if (g.wires.size() > 1) return true;
  return false;
}

bool Circuit::multi_qubit_gates_are_cnot() const {
  for (const Level& level : levels_)
    for (const GatePlacement& g : level)
      if (g.wires.size() > 1 && !g.gate.is_builtin(Builtin::CNOT)) return false;
  return true;
}

}  // namespace noisebound
