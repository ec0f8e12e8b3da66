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

#include "noisebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "noisebound/parallel.hpp"

namespace noisebound {

double epsk_threshold(int k) {
  if (k < 1) throw std::invalid_argument("epsk_threshold: k must be at least 1");
  return 1.0 - std::sqrt(std::pow(2.0, 1.0 / k) - 1.0);
}

double cnot_threshold() { return 1.0 - 1.0 / std::sqrt(2.0); }

std::string constraint_tag(Constraint c) {
  switch (c) {
    case Constraint::KGate: return "k-gate";
    case Constraint::OneQubit: return "one-qubit";
    case Constraint::Cnot: return "cnot";
  }
  return "?";
}

std::string constraint_formula(Constraint c) {
  switch (c) {
    case Constraint::KGate: return "(1+μ²)^k ≤ 2θ";
    case Constraint::OneQubit: return "1+(1−ε₁)² ≤ 2θ";
    case Constraint::Cnot: return "(1+μ²)/2+μ⁴ ≤ θ";
  }
  return "?";
}

namespace {

double one_qubit_term(const NoiseModel& noise) {
  const double keep = 1.0 - noise.eps1;
  return (1.0 + keep * keep) / 2.0;
}

ThetaResult finish(double multi, Constraint multi_tag, double one) {
  ThetaResult r;
  r.multi_qubit_term = multi;
  r.one_qubit_term = one;
  // Ties name the multi-qubit constraint.
  if (multi >= one) {
    r.theta = multi;
    r.binding = multi_tag;
  } else {
    r.theta = one;
    r.binding = Constraint::OneQubit;
  }
  r.feasible = r.theta < 1.0;
  return r;
}

}  // namespace

ThetaResult theta_for(const NoiseModel& noise, int k, bool cnot_only) {
  validate_noise(noise);
  if (k < 1) throw std::invalid_argument("theta_for: k must be at least 1");
  if (cnot_only && k != 2) throw std::invalid_argument("theta_for: CNOT mode requires k = 2");
  const double mu = 1.0 - noise.epsk;
  const double mu2 = mu * mu;
  if (cnot_only) return finish((1.0 + mu2) / 2.0 + mu2 * mu2, Constraint::Cnot, one_qubit_term(noise));
  return finish(std::pow(1.0 + mu2, k) / 2.0, Constraint::KGate, one_qubit_term(noise));
}

ThetaResult theta_for_circuit(const Circuit& c) {
  if (!c.has_multi_qubit_gates()) {
    validate_noise(c.noise());
    ThetaResult r;
    r.one_qubit_term = one_qubit_term(c.noise());
    r.theta = r.one_qubit_term;
    r.binding = Constraint::OneQubit;
    r.feasible = r.theta < 1.0;
    return r;
  }
  const bool cnot = c.k_max() == 2 && c.multi_qubit_gates_are_cnot();
  return theta_for(c.noise(), c.k_max(), cnot);
}

double decay_bound(double theta, int levels) {
  if (levels < 0) throw std::invalid_argument("decay_bound: level count must be non-negative");
  return std::pow(theta, levels / 2.0);
}

InvariantRecord invariant_check(const Circuit& c, const InputPair& pair, const ConsistentSet& v, double theta) {
  return invariant_check(CompiledCircuit(c), coeffs_from_op(pair.delta()), v, theta);
}

InvariantRecord invariant_check(const CompiledCircuit& c, const CoeffVector& delta0, const ConsistentSet& v,
                                double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("invariant_check: theta must lie in (0, 1]");
  InvariantRecord r;
  r.qubits = v.qubits;
  r.dist = dist_latest(v.qubits).dist;
  const CoeffVector reduced = reduced_delta(c, delta0, v.qubits);
  r.lhs = sum_of_squares(reduced) / std::ldexp(1.0, static_cast<int>(v.qubits.size()));
  r.rhs = r.dist ? 2.0 * std::pow(theta, *r.dist) : 0.0;
  r.margin = r.rhs - r.lhs;
  r.pass = r.lhs <= r.rhs + kBoundTol;
  return r;
}

InvariantReport audit_invariant(const CompiledCircuit& c, const InputPair& pair, double theta, int max_set_size,
                                std::size_t cap, int jobs) {
  const std::vector<ConsistentSet> sets = enumerate_consistent_sets(c.circuit(), max_set_size, cap);
  const CoeffVector delta0 = coeffs_from_op(pair.delta());
  InvariantReport report;
  report.theta = theta;
  report.records.resize(sets.size());
  parallel_for(sets.size(), jobs,
               [&](std::size_t i) { report.records[i] = invariant_check(c, delta0, sets[i], theta); });
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const InvariantRecord& r : report.records) {
    report.min_margin = std::min(report.min_margin, r.margin);
    report.all_pass = report.all_pass && r.pass;
  }
  return report;
}

std::vector<SweepRow> sweep(std::span<const NoiseModel> grid, int k, bool cnot_only) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const NoiseModel& noise : grid) rows.push_back(SweepRow{noise, theta_for(noise, k, cnot_only)});
  return rows;
}

}  // namespace noisebound
