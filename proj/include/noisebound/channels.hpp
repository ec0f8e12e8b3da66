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
#include <string>
#include <variant>
#include <vector>

#include "noisebound/linalg.hpp"
#include "noisebound/pauli.hpp"

namespace noisebound {

/// Real 4^k x 4^k Pauli transfer matrix, M[S', S] = Tr(S' G(S)) / 2^k.
/// Rows and columns use the local coefficient index of PauliString.
struct Ptm {
  int arity = 0;
  RMatrix matrix;

  /// Applies to a coefficient vector on exactly `arity` qubits.
  CoeffVector apply(const CoeffVector& v) const;
};

/// k-qubit gate of the form rho -> sum_i p_i U_i rho U_i^dagger.
struct UnitaryMixture {
  int arity = 0;
  std::vector<double> probs;
  std::vector<CMatrix> unitaries;
};

/// One-qubit map U1 o J o U2 where J fixes I up to a Z translation t and
/// scales X, Y, Z by lambda1, lambda2, lambda1*lambda2.
struct RswChannel {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  int t_sign = 1;
  CMatrix pre = CMatrix::Identity(2, 2);   // U2, applied first
  CMatrix post = CMatrix::Identity(2, 2);  // U1, applied last

  double t() const;

  static RswChannel unitary(const CMatrix& u);
  /// Maps every state to |0><0|.
  static RswChannel reset();
};

/// Convex combination of RSW-form channels.
struct OneQubitGate {
  std::vector<double> probs;
  std::vector<RswChannel> terms;
};

Ptm ptm_of_unitary(const CMatrix& u, int k);
Ptm ptm_of_mixture(const UnitaryMixture& g);
Ptm rsw_ptm(const RswChannel& c);
Ptm ptm_of_one_qubit(const OneQubitGate& g);
Ptm depolarizing_ptm(double p);

/// sum_i p_i max(lambda1_i^2, lambda2_i^2). With this beta,
///   |d'(X)|^2 + |d'(Y)|^2 + |d'(Z)|^2 <= (1-beta) d(I)^2 + beta (d(X)^2 + d(Y)^2 + d(Z)^2)
/// for every Hermitian input d.
double beta_of_gate(const OneQubitGate& g);

struct SignedPauli {
  PauliString pauli;
  int sign = 1;
  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// CNOT R CNOT^dagger for a two-qubit R, qubit 0 the control. Computed from
/// the symplectic update, with the sign recovered from the Y phases.
SignedPauli cnot_pauli_action(const PauliString& r);

enum class Builtin { ID, H, X, Y, Z, S, T, RESET, CNOT, CZ, SWAP };

std::string builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(const std::string& name);
int builtin_arity(Builtin b);
/// Unitary matrix of a builtin; RESET has none.
std::optional<CMatrix> builtin_matrix(Builtin b);

struct UnitaryGate {
  CMatrix matrix;
};
struct MixtureGate {
  std::vector<double> probs;
  std::vector<CMatrix> unitaries;
};
struct RswGate {
  RswChannel channel;
};
struct DepolGate {
  double p = 0.0;
};

/// A gate as written in a circuit, before validation and lowering.
class GateSpec {
 public:
  using Variant = std::variant<Builtin, UnitaryGate, MixtureGate, RswGate, DepolGate>;

  GateSpec() : v_(Builtin::ID) {}
  GateSpec(Variant v) : v_(std::move(v)) {}

  const Variant& variant() const { return v_; }
  /// Number of wires the gate acts on; 0 when it cannot be inferred.
  int arity() const;
  /// Builtin name, or one of U, MIX, RSW, DEPOL.
  std::string name() const;
  bool is_builtin(Builtin b) const;

  friend bool operator==(const GateSpec& a, const GateSpec& b);

 private:
  Variant v_;
};

struct ValidationReport {
  bool ok = true;
  /// Tag of the failing invariant: "probabilities", "unitarity", "shape",
  /// "lambda range", "sign", "depolarizing strength".
  std::string invariant;
  std::string message;

  explicit operator bool() const { return ok; }
};

ValidationReport validate_gate(const GateSpec& g);

class GateError : public std::runtime_error {
 public:
  GateError(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// Gate in the form the engines consume: multi-qubit gates are unitary
/// mixtures, one-qubit gates are RSW mixtures.
using LoweredGate = std::variant<UnitaryMixture, OneQubitGate>;

/// Validates and lowers; throws GateError on a failed invariant.
LoweredGate lower_gate(const GateSpec& g);
Ptm ptm_of_lowered(const LoweredGate& g);

}  // namespace noisebound
