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

#include "noisebound/channels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace noisebound {

namespace {

constexpr double kProbTol = 1e-10;
constexpr double kImagTol = 1e-9;

// Coefficient-index positions of the one-qubit Paulis.
constexpr int kI = 0, kX = 1, kZ = 2, kY = 3;

bool same_matrix(const CMatrix& a, const CMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

bool same_channel(const RswChannel& a, const RswChannel& b) {
  return a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2 && a.t_sign == b.t_sign && same_matrix(a.pre, b.pre) &&
         same_matrix(a.post, b.post);
}

ValidationReport fail(std::string invariant, std::string message) {
  return ValidationReport{false, std::move(invariant), std::move(message)};
}

ValidationReport check_unitary(const CMatrix& u, const std::string& what) {
  if (u.rows() != u.cols() || !is_power_of_two(u.rows()) || u.rows() < 2)
    return fail("shape", what + ": matrix must be square with power-of-2 dimension >= 2");
  if (!is_unitary(u)) return fail("unitarity", what + ": matrix is not unitary within 1e-10");
  return {};
}

ValidationReport check_probabilities(const std::vector<double>& probs, std::size_t count) {
  if (probs.empty()) return fail("probabilities", "mixture has no terms");
  if (probs.size() != count) return fail("probabilities", "number of probabilities does not match number of terms");
  for (double p : probs)
    if (!(p >= 0.0)) return fail("probabilities", "probabilities must be non-negative");
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > kProbTol) return fail("probabilities", "probabilities must sum to 1");
  return {};
}

ValidationReport check_rsw(const RswChannel& c) {
  if (!(std::abs(c.lambda1) <= 1.0) || !(std::abs(c.lambda2) <= 1.0))
    return fail("lambda range", "RSW lambdas must lie in [-1, 1]");
  if (c.t_sign != 1 && c.t_sign != -1) return fail("sign", "RSW sign must be +1 or -1");
  if (c.pre.rows() != 2 || c.post.rows() != 2) return fail("shape", "RSW unitaries must be 2x2");
  if (auto r = check_unitary(c.pre, "RSW pre-unitary"); !r) return r;
  if (auto r = check_unitary(c.post, "RSW post-unitary"); !r) return r;
  return {};
}

}  // namespace

CoeffVector Ptm::apply(const CoeffVector& v) const {
  if (v.num_qubits() != arity) throw std::invalid_argument("Ptm::apply: qubit count mismatch");
  const Eigen::Map<const RVector> in(v.values().data(), static_cast<Eigen::Index>(v.size()));
  const RVector out = matrix * in;
  return CoeffVector(arity, std::vector<double>(out.data(), out.data() + out.size()));
}

double RswChannel::t() const {
  return t_sign * std::sqrt(std::max(0.0, (1.0 - lambda1 * lambda1) * (1.0 - lambda2 * lambda2)));
}

RswChannel RswChannel::unitary(const CMatrix& u) {
  RswChannel c;
  c.post = u;
  return c;
}

RswChannel RswChannel::reset() {
  RswChannel c;
  c.lambda1 = 0.0;
  c.lambda2 = 0.0;
  c.t_sign = 1;
  return c;
}

Ptm ptm_of_unitary(const CMatrix& u, int k) {
  if (u.rows() != (Eigen::Index{1} << k) || u.cols() != u.rows())
    throw std::invalid_argument("ptm_of_unitary: dimension does not match arity");
  if (!is_unitary(u)) throw GateError("unitarity", "ptm_of_unitary: matrix is not unitary");
  const Eigen::Index count = Eigen::Index{1} << (2 * k);
  const double dim = static_cast<double>(u.rows());
  std::vector<CMatrix> paulis;
  paulis.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) paulis.push_back(pauli_matrix(PauliString::from_index(k, i)));
  Ptm out{k, RMatrix::Zero(count, count)};
  for (Eigen::Index col = 0; col < count; ++col) {
    const CMatrix image = u * paulis[col] * u.adjoint();
    for (Eigen::Index row = 0; row < count; ++row) {
      const cplx entry = (paulis[row] * image).trace() / dim;
      if (std::abs(entry.imag()) > kImagTol) throw GateError("unitarity", "ptm_of_unitary: non-real transfer entry");
      out.matrix(row, col) = entry.real();
    }
  }
  return out;
}

Ptm ptm_of_mixture(const UnitaryMixture& g) {
  const Eigen::Index count = Eigen::Index{1} << (2 * g.arity);
  Ptm out{g.arity, RMatrix::Zero(count, count)};
  for (std::size_t i = 0; i < g.unitaries.size(); ++i) {
    if (g.probs[i] == 0.0) continue;
    out.matrix += g.probs[i] * ptm_of_unitary(g.unitaries[i], g.arity).matrix;
  }
  return out;
}

Ptm rsw_ptm(const RswChannel& c) {
  if (auto r = check_rsw(c); !r) throw GateError(r.invariant, r.message);
  RMatrix j = RMatrix::Zero(4, 4);
  j(kI, kI) = 1.0;
  j(kX, kX) = c.lambda1;
  j(kY, kY) = c.lambda2;
  j(kZ, kZ) = c.lambda1 * c.lambda2;
  j(kZ, kI) = c.t();
  return Ptm{1, ptm_of_unitary(c.post, 1).matrix * j * ptm_of_unitary(c.pre, 1).matrix};
}

Ptm ptm_of_one_qubit(const OneQubitGate& g) {
  Ptm out{1, RMatrix::Zero(4, 4)};
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    if (g.probs[i] == 0.0) continue;
    out.matrix += g.probs[i] * rsw_ptm(g.terms[i]).matrix;
  }
  return out;
}

Ptm depolarizing_ptm(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing_ptm: p must lie in [0, 1]");
  Ptm out{1, RMatrix::Identity(4, 4)};
  for (int i : {kX, kY, kZ}) out.matrix(i, i) = 1.0 - p;
  return out;
}

double beta_of_gate(const OneQubitGate& g) {
  double beta = 0.0;
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    const double l1 = g.terms[i].lambda1 * g.terms[i].lambda1;
    const double l2 = g.terms[i].lambda2 * g.terms[i].lambda2;
    beta += g.probs[i] * std::max(l1, l2);
  }
  return std::clamp(beta, 0.0, 1.0);
}

SignedPauli cnot_pauli_action(const PauliString& r) {
  if (r.num_qubits() != 2) throw std::invalid_argument("cnot_pauli_action: expects a two-qubit Pauli string");
  // Write R = i^{|x&z|} X^x Z^z. Conjugation sends X_c -> X_c X_t and
  // Z_t -> Z_c Z_t; the X-block and Z-block stay separately ordered, so
  // X^x Z^z maps to X^x' Z^z' with no extra phase.
  const std::uint64_t xc = r.x_bits() & 1u, xt = (r.x_bits() >> 1) & 1u;
  const std::uint64_t zc = r.z_bits() & 1u, zt = (r.z_bits() >> 1) & 1u;
  const std::uint64_t x_out = xc | ((xt ^ xc) << 1);
  const std::uint64_t z_out = (zc ^ zt) | (zt << 1);
  const int before = std::popcount(r.x_bits() & r.z_bits());
  const int after = std::popcount(x_out & z_out);
  const int phase = ((before - after) % 4 + 4) % 4;
  if (phase % 2 != 0) throw std::logic_error("cnot_pauli_action: non-Hermitian image");
  return SignedPauli{PauliString(2, x_out, z_out), phase == 0 ? 1 : -1};
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::ID: return "ID";
    case Builtin::H: return "H";
    case Builtin::X: return "X";
    case Builtin::Y: return "Y";
    case Builtin::Z: return "Z";
    case Builtin::S: return "S";
    case Builtin::T: return "T";
    case Builtin::RESET: return "RESET";
    case Builtin::CNOT: return "CNOT";
    case Builtin::CZ: return "CZ";
    case Builtin::SWAP: return "SWAP";
  }
  return "?";
}

std::optional<Builtin> builtin_from_name(const std::string& name) {
  for (Builtin b : {Builtin::ID, Builtin::H, Builtin::X, Builtin::Y, Builtin::Z, Builtin::S, Builtin::T,
                    Builtin::RESET, Builtin::CNOT, Builtin::CZ, Builtin::SWAP}) {
    if (builtin_name(b) == name) return b;
  }
  return std::nullopt;
}

int builtin_arity(Builtin b) {
  switch (b) {
    case Builtin::CNOT:
    case Builtin::CZ:
    case Builtin::SWAP: return 2;
    default: return 1;
  }
}

std::optional<CMatrix> builtin_matrix(Builtin b) {
  switch (b) {
    case Builtin::ID: return mat::identity(1);
    case Builtin::H: return mat::hadamard();
    case Builtin::X: return mat::pauli_x();
    case Builtin::Y: return mat::pauli_y();
    case Builtin::Z: return mat::pauli_z();
    case Builtin::S: return mat::phase_s();
    case Builtin::T: return mat::phase_t();
    case Builtin::RESET: return std::nullopt;
    case Builtin::CNOT: return mat::cnot();
    case Builtin::CZ: return mat::cz();
    case Builtin::SWAP: return mat::swap();
  }
  return std::nullopt;
}

int GateSpec::arity() const {
  const auto dim_arity = [](const CMatrix& m) {
    return (m.rows() >= 2 && is_power_of_two(m.rows())) ? log2_exact(m.rows()) : 0;
  };
  return std::visit(
      [&](const auto& g) -> int {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Builtin>) {
          return builtin_arity(g);
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          return dim_arity(g.matrix);
        } else if constexpr (std::is_same_v<G, MixtureGate>) {
          return g.unitaries.empty() ? 0 : dim_arity(g.unitaries.front());
        } else {
          return 1;
        }
      },
      v_);
}

std::string GateSpec::name() const {
  return std::visit(
      [](const auto& g) -> std::string {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, Builtin>) return builtin_name(g);
        if constexpr (std::is_same_v<G, UnitaryGate>) return "U";
        if constexpr (std::is_same_v<G, MixtureGate>) return "MIX";
        if constexpr (std::is_same_v<G, RswGate>) return "RSW";
        if constexpr (std::is_same_v<G, DepolGate>) return "DEPOL";
      },
      v_);
}

bool GateSpec::is_builtin(Builtin b) const {
  const auto* p = std::get_if<Builtin>(&v_);
  return p != nullptr && *p == b;
}

bool operator==(const GateSpec& a, const GateSpec& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return std::visit(
      [&](const auto& ga) -> bool {
        using G = std::decay_t<decltype(ga)>;
        const G& gb = std::get<G>(b.v_);
        if constexpr (std::is_same_v<G, Builtin>) {
          return ga == gb;
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          return same_matrix(ga.matrix, gb.matrix);
        } else if constexpr (std::is_same_v<G, MixtureGate>) {
          if (ga.probs != gb.probs || ga.unitaries.size() != gb.unitaries.size()) return false;
          for (std::size_t i = 0; i < ga.unitaries.size(); ++i)
            if (!same_matrix(ga.unitaries[i], gb.unitaries[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<G, RswGate>) {
          return same_channel(ga.channel, gb.channel);
        } else {
          return ga.p == gb.p;
        }
      },
      a.v_);
}

ValidationReport validate_gate(const GateSpec& g) {
  return std::visit(
      [](const auto& gate) -> ValidationReport {
        using G = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<G, Builtin>) {
          return {};
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          return check_unitary(gate.matrix, "U");
        } else if constexpr (std::is_same_v<G, MixtureGate>) {
          if (auto r = check_probabilities(gate.probs, gate.unitaries.size()); !r) return r;
          const Eigen::Index dim = gate.unitaries.front().rows();
          for (const CMatrix& u : gate.unitaries) {
            if (u.rows() != dim) return fail("shape", "MIX: all unitaries must share one dimension");
            if (auto r = check_unitary(u, "MIX"); !r) return r;
          }
          return {};
        } else if constexpr (std::is_same_v<G, RswGate>) {
          return check_rsw(gate.channel);
        } else {
          if (!(gate.p >= 0.0 && gate.p <= 1.0))
            return fail("depolarizing strength", "DEPOL: p must lie in [0, 1]");
          return {};
        }
      },
      g.variant());
}

namespace {

OneQubitGate unitary_terms(const std::vector<double>& probs, const std::vector<CMatrix>& us) {
  OneQubitGate out;
  out.probs = probs;
  for (const CMatrix& u : us) out.terms.push_back(RswChannel::unitary(u));
  return out;
}

LoweredGate lower_unitaries(const std::vector<double>& probs, const std::vector<CMatrix>& us) {
  const int k = log2_exact(us.front().rows());
  if (k == 1) return unitary_terms(probs, us);
  return UnitaryMixture{k, probs, us};
}

}  // namespace

LoweredGate lower_gate(const GateSpec& g) {
  if (auto r = validate_gate(g); !r) throw GateError(r.invariant, r.message);
  return std::visit(
      [](const auto& gate) -> LoweredGate {
        using G = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<G, Builtin>) {
          if (gate == Builtin::RESET) return OneQubitGate{{1.0}, {RswChannel::reset()}};
          return lower_unitaries({1.0}, {*builtin_matrix(gate)});
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          return lower_unitaries({1.0}, {gate.matrix});
        } else if constexpr (std::is_same_v<G, MixtureGate>) {
          return lower_unitaries(gate.probs, gate.unitaries);
        } else if constexpr (std::is_same_v<G, RswGate>) {
          return OneQubitGate{{1.0}, {gate.channel}};
        } else {
          // (1-p) rho + p I/2 == (1 - 3p/4) rho + p/4 (X rho X + Y rho Y + Z rho Z)
          const double q = gate.p / 4.0;
          return unitary_terms({1.0 - 3.0 * q, q, q, q},
                               {mat::identity(1), mat::pauli_x(), mat::pauli_y(), mat::pauli_z()});
        }
      },
      g.variant());
}

Ptm ptm_of_lowered(const LoweredGate& g) {
  if (const auto* m = std::get_if<UnitaryMixture>(&g)) return ptm_of_mixture(*m);
  return ptm_of_one_qubit(std::get<OneQubitGate>(g));
}

}  // namespace noisebound
