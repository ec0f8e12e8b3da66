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

#include <cstdint>
#include <span>
#include <vector>

#include "noisebound/channels.hpp"
#include "noisebound/circuit.hpp"
#include "noisebound/pauli.hpp"

namespace noisebound {

/// A downward-closed set of applied gates: if a gate is in the cut, so is
/// the gate preceding it on each of its wires.
class Cut {
 public:
  static Cut empty(const Circuit& c);
  static Cut full(const Circuit& c);
  /// All gates in levels 1..levels.
  static Cut prefix(const Circuit& c, int levels);
  /// apply_closure(V): the fewest gates that produce V.
  static Cut minimal(const Circuit& c, std::span<const QubitRef> v);
  /// The most gates that can run without consuming any member of V.
  static Cut maximal(const Circuit& c, std::span<const QubitRef> v);
  /// Arbitrary gate set; check with is_valid().
  static Cut from_gates(const Circuit& c, std::span<const GateId> gates);

  bool contains(GateId id) const;
  bool is_valid(const Circuit& c) const;
  /// Applied gates in level order.
  std::vector<GateId> gates() const;
  /// Time of wire w after the cut runs: the last applied level on w, 0 if none.
  int frontier(const Circuit& c, int wire) const;

 private:
  explicit Cut(const Circuit& c);
  std::vector<std::vector<char>> applied_;
};

/// Two n-qubit density matrices (PSD, unit trace within 1e-10).
struct InputPair {
  HermitianOp rho;
  HermitianOp tau;

  static InputPair make(CMatrix rho, CMatrix tau);
  /// Computational basis states; bit q of each mask is qubit q.
  static InputPair basis(int n, std::uint64_t rho_bits, std::uint64_t tau_bits);
  HermitianOp delta() const;
};

bool is_density_matrix(const CMatrix& m, double tol = 1e-10);

/// Circuit with every gate validated and lowered once, plus its transfer
/// matrices. Reuse it when evolving many inputs or many cuts.
class CompiledCircuit {
 public:
  explicit CompiledCircuit(Circuit c);

  const Circuit& circuit() const { return circuit_; }
  const LoweredGate& lowered(GateId id) const;
  const Ptm& ptm(GateId id) const;

 private:
  Circuit circuit_;
  std::vector<std::vector<LoweredGate>> lowered_;
  std::vector<std::vector<Ptm>> ptms_;
};

/// In-place building blocks of the two engines.
namespace kernels {

/// Applies a 4^k x 4^k transfer matrix to the sites `wires` of v.
void apply_ptm(CoeffVector& v, const RMatrix& m, std::span<const int> wires);
/// Scales every coefficient supported on `wire` by (1 - p).
void depolarize(CoeffVector& v, int wire, double p);

/// rho -> U rho U^dagger on `wires` (first wire is the most significant
/// index of U).
void apply_unitary(CMatrix& rho, const CMatrix& u, std::span<const int> wires);
/// rho -> (1 - p) rho + p (I/2 (x) Tr_wire rho).
void depolarize(CMatrix& rho, int wire, double p);
/// Applies U1 o J o U2 on one wire using J's action on 2x2 blocks.
void apply_rsw(CMatrix& rho, const RswChannel& ch, int wire);
/// Gate channel without its noise.
void apply_lowered(CMatrix& rho, const LoweredGate& g, std::span<const int> wires);

}  // namespace kernels

/// Dense density-matrix engine. Multi-qubit gates: epsk noise on each input,
/// then the unitary mixture. One-qubit gates: the channel, then eps1 noise.
HermitianOp evolve_density(const Circuit& c, const HermitianOp& op, const Cut& cut);
HermitianOp evolve_density(const CompiledCircuit& c, const HermitianOp& op, const Cut& cut);

/// Pauli-coefficient engine; the same map as evolve_density in the Pauli basis.
CoeffVector evolve_pauli(const Circuit& c, const CoeffVector& v, const Cut& cut);
CoeffVector evolve_pauli(const CompiledCircuit& c, const CoeffVector& v, const Cut& cut);

/// Coefficients of delta restricted to V after the minimal cut producing V.
/// Local qubit i of the result is the i-th smallest wire of V.
CoeffVector reduced_delta(const Circuit& c, const HermitianOp& delta0, const ConsistentSet& v);
CoeffVector reduced_delta(const CompiledCircuit& c, const CoeffVector& delta0, std::span<const QubitRef> v);
/// Same, through a caller-chosen cut whose frontier must match V.
CoeffVector reduced_delta(const CompiledCircuit& c, const CoeffVector& delta0, std::span<const QubitRef> v,
                          const Cut& cut);

/// |Pr[1 | rho] - Pr[1 | tau]| at the output wire after all T levels, as
/// (1/2)|delta(Z)| of the reduced difference.
double output_distinguishability(const Circuit& c, const InputPair& pair);
double output_distinguishability(const CompiledCircuit& c, const CoeffVector& delta0);

/// Born-rule probability of reading 1 on the output wire, via the density engine.
double probability_of_one(const CompiledCircuit& c, const HermitianOp& rho);

}  // namespace noisebound
