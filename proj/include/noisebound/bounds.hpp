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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noisebound/circuit.hpp"
#include "noisebound/simulate.hpp"

namespace noisebound {

/// Bound comparisons allow this much accumulated roundoff.
inline constexpr double kBoundTol = 1e-9;

/// Depolarizing strength above which k-qubit circuits forget their input:
/// 1 - sqrt(2^(1/k) - 1).
double epsk_threshold(int k);
/// The same for circuits whose only multi-qubit gate is CNOT: 1 - 1/sqrt(2).
double cnot_threshold();

enum class Constraint { KGate, OneQubit, Cnot };

std::string constraint_tag(Constraint c);
/// Human-readable inequality, e.g. "(1+μ²)^k ≤ 2θ".
std::string constraint_formula(Constraint c);

struct ThetaResult {
  double theta = 0.0;
  bool feasible = false;
  Constraint binding = Constraint::KGate;
  /// Value required by the multi-qubit constraint (general or CNOT form);
  /// unset when the circuit has no multi-qubit gate.
  std::optional<double> multi_qubit_term;
  double one_qubit_term = 0.0;
};

/// Smallest theta meeting the induction's constraints, with mu = 1 - epsk:
///   general:   max((1+mu^2)^k / 2, (1+(1-eps1)^2) / 2)
///   CNOT only: max((1+mu^2)/2 + mu^4, (1+(1-eps1)^2) / 2)
/// Feasible iff theta < 1. cnot_only requires k == 2.
ThetaResult theta_for(const NoiseModel& noise, int k, bool cnot_only);

/// theta_for with the circuit's own k, CNOT mode when every multi-qubit
/// gate is CNOT, and only the one-qubit constraint when there is none.
ThetaResult theta_for_circuit(const Circuit& c);

/// theta^(T/2): bound on output distinguishability after T levels.
double decay_bound(double theta, int levels);

struct InvariantRecord {
  std::vector<QubitRef> qubits;
  std::optional<int> dist;
  double lhs = 0.0;  // Tr(delta_V^2)
  double rhs = 0.0;  // 2 theta^dist, 0 for the empty set
  double margin = 0.0;
  bool pass = true;
};

/// Checks Tr(delta_V^2) <= 2 theta^dist(V) for one consistent set.
InvariantRecord invariant_check(const Circuit& c, const InputPair& pair, const ConsistentSet& v, double theta);
InvariantRecord invariant_check(const CompiledCircuit& c, const CoeffVector& delta0, const ConsistentSet& v,
                                double theta);

struct InvariantReport {
  double theta = 0.0;
  std::vector<InvariantRecord> records;
  double min_margin = 0.0;
  bool all_pass = true;
};

/// Runs invariant_check on every consistent set of size <= max_set_size.
/// Work is split across `jobs` threads; records keep enumeration order.
InvariantReport audit_invariant(const CompiledCircuit& c, const InputPair& pair, double theta, int max_set_size,
                                std::size_t cap = 1'000'000, int jobs = 1);

struct SweepRow {
  NoiseModel noise;
  ThetaResult result;
};

std::vector<SweepRow> sweep(std::span<const NoiseModel> grid, int k, bool cnot_only);

}  // namespace noisebound
