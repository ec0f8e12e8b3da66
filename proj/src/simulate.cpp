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

#include "noisebound/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "noisebound/random.hpp"

namespace noisebound {

// ---------------------------------------------------------------------------
// Cut

Cut::Cut(const Circuit& c) {
  applied_.resize(static_cast<std::size_t>(c.num_levels()));
  for (int t = 1; t <= c.num_levels(); ++t) applied_[static_cast<std::size_t>(t - 1)].assign(c.level(t).size(), 0);
}

Cut Cut::empty(const Circuit& c) { return Cut(c); }

Cut Cut::full(const Circuit& c) { return prefix(c, c.num_levels()); }

Cut Cut::prefix(const Circuit& c, int levels) {
  if (levels < 0 || levels > c.num_levels()) throw std::out_of_range("Cut::prefix: level count out of range");
  Cut cut(c);
  for (int t = 0; t < levels; ++t) std::fill(cut.applied_[t].begin(), cut.applied_[t].end(), 1);
  return cut;
}

Cut Cut::minimal(const Circuit& c, std::span<const QubitRef> v) {
  const std::vector<GateId> gates = apply_closure(c, v);
  return from_gates(c, gates);
}

Cut Cut::maximal(const Circuit& c, std::span<const QubitRef> v) {
  if (!is_consistent(v, c)) throw CircuitError("Cut::maximal: qubit set is not consistent");
  std::vector<int> stop(static_cast<std::size_t>(c.num_qubits()), std::numeric_limits<int>::max());
  for (const QubitRef& q : v) stop[static_cast<std::size_t>(q.wire)] = q.time;
  Cut cut(c);
  for (int t = 1; t <= c.num_levels(); ++t) {
    const Circuit::Level& level = c.level(t);
    for (std::size_t i = 0; i < level.size(); ++i) {
      bool ok = true;
      for (int w : level[i].wires) {
        if (stop[static_cast<std::size_t>(w)] < t) ok = false;
        if (t > 1 && !cut.contains(c.gate_at(t - 1, w))) ok = false;
      }
      cut.applied_[static_cast<std::size_t>(t - 1)][i] = ok ? 1 : 0;
    }
  }
  return cut;
}

Cut Cut::from_gates(const Circuit& c, std::span<const GateId> gates) {
  Cut cut(c);
  for (const GateId& id : gates) {
    if (id.level < 1 || id.level > c.num_levels() || id.index < 0 ||
        id.index >= static_cast<int>(c.level(id.level).size()))
      throw std::out_of_range("Cut::from_gates: gate id out of range");
    cut.applied_[static_cast<std::size_t>(id.level - 1)][static_cast<std::size_t>(id.index)] = 1;
  }
  return cut;
}

bool Cut::contains(GateId id) const {
  return applied_.at(static_cast<std::size_t>(id.level - 1)).at(static_cast<std::size_t>(id.index)) != 0;
}

bool Cut::is_valid(const Circuit& c) const {
  if (applied_.size() != static_cast<std::size_t>(c.num_levels())) return false;
  for (int t = 1; t <= c.num_levels(); ++t) {
    const Circuit::Level& level = c.level(t);
    if (applied_[static_cast<std::size_t>(t - 1)].size() != level.size()) return false;
    if (t == 1) continue;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!applied_[static_cast<std::size_t>(t - 1)][i]) continue;
      for (int w : level[i].wires)
        if (!contains(c.gate_at(t - 1, w))) return false;
    }
  }
  return true;
}

std::vector<GateId> Cut::gates() const {
  std::vector<GateId> out;
  for (std::size_t t = 0; t < applied_.size(); ++t)
    for (std::size_t i = 0; i < applied_[t].size(); ++i)
      if (applied_[t][i]) out.push_back(GateId{static_cast<int>(t) + 1, static_cast<int>(i)});
  return out;
}

int Cut::frontier(const Circuit& c, int wire) const {
  int last = 0;
  for (int t = 1; t <= c.num_levels(); ++t)
    if (contains(c.gate_at(t, wire))) last = t;
  return last;
}

// ---------------------------------------------------------------------------
// Inputs

bool is_density_matrix(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows()) || !is_hermitian(m, tol)) return false;
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol) return false;
  const CMatrix herm = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

InputPair InputPair::make(CMatrix rho, CMatrix tau) {
  if (rho.rows() != tau.rows()) throw std::invalid_argument("InputPair: rho and tau differ in dimension");
  if (!is_density_matrix(rho)) throw std::invalid_argument("InputPair: rho is not a density matrix");
  if (!is_density_matrix(tau)) throw std::invalid_argument("InputPair: tau is not a density matrix");
  return InputPair{HermitianOp::hermitized(rho), HermitianOp::hermitized(tau)};
}

InputPair InputPair::basis(int n, std::uint64_t rho_bits, std::uint64_t tau_bits) {
  return make(basis_density(n, rho_bits), basis_density(n, tau_bits));
}

HermitianOp InputPair::delta() const { return HermitianOp::hermitized(rho.matrix() - tau.matrix()); }

// ---------------------------------------------------------------------------
// CompiledCircuit

CompiledCircuit::CompiledCircuit(Circuit c) : circuit_(std::move(c)) {
  for (const Circuit::Level& level : circuit_.levels()) {
    std::vector<LoweredGate> lowered;
    std::vector<Ptm> ptms;
    for (const GatePlacement& g : level) {
      lowered.push_back(lower_gate(g.gate));
      ptms.push_back(ptm_of_lowered(lowered.back()));
    }
    lowered_.push_back(std::move(lowered));
    ptms_.push_back(std::move(ptms));
  }
}

const LoweredGate& CompiledCircuit::lowered(GateId id) const {
  return lowered_.at(static_cast<std::size_t>(id.level - 1)).at(static_cast<std::size_t>(id.index));
}

const Ptm& CompiledCircuit::ptm(GateId id) const {
  return ptms_.at(static_cast<std::size_t>(id.level - 1)).at(static_cast<std::size_t>(id.index));
}

// ---------------------------------------------------------------------------
// Kernels

namespace kernels {

void apply_ptm(CoeffVector& v, const RMatrix& m, std::span<const int> wires) {
  const int k = static_cast<int>(wires.size());
  const std::size_t local = std::size_t{1} << (2 * k);
  if (static_cast<std::size_t>(m.rows()) != local || m.rows() != m.cols())
    throw std::invalid_argument("apply_ptm: matrix size does not match wire count");
  std::uint64_t mask = 0;
  for (int w : wires) {
    if (w < 0 || w >= v.num_qubits()) throw std::out_of_range("apply_ptm: wire out of range");
    mask |= std::uint64_t{3} << (2 * w);
  }
  std::vector<std::uint64_t> offset(local, 0);
  for (std::size_t l = 0; l < local; ++l)
    for (int i = 0; i < k; ++i) offset[l] |= ((l >> (2 * i)) & 3u) << (2 * wires[static_cast<std::size_t>(i)]);

  RVector in(static_cast<Eigen::Index>(local));
  RVector out(static_cast<Eigen::Index>(local));
  const std::uint64_t size = v.size();
  // Walk every index whose wire sites are all identity.
  for (std::uint64_t base = 0; base < size; base = ((base | mask) + 1) & ~mask) {
    for (std::size_t l = 0; l < local; ++l) in(static_cast<Eigen::Index>(l)) = v[base | offset[l]];
    out.noalias() = m * in;
    for (std::size_t l = 0; l < local; ++l) v[base | offset[l]] = out(static_cast<Eigen::Index>(l));
  }
}

void depolarize(CoeffVector& v, int wire, double p) {
  if (wire < 0 || wire >= v.num_qubits()) throw std::out_of_range("depolarize: wire out of range");
  const double keep = 1.0 - p;
  for (std::uint64_t idx = 0; idx < v.size(); ++idx)
    if ((idx >> (2 * wire)) & 3u) v[idx] *= keep;
}

namespace {

int dense_qubits(const CMatrix& rho) { return log2_exact(rho.rows()); }

std::uint64_t bit_of(int n, int wire) { return std::uint64_t{1} << (n - 1 - wire); }

void left_apply(CMatrix& m, const CMatrix& u, std::span<const int> wires) {
  const int n = dense_qubits(m);
  const int k = static_cast<int>(wires.size());
  const std::size_t local = std::size_t{1} << k;
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> offset(local, 0);
  for (int i = 0; i < k; ++i) {
    const int w = wires[static_cast<std::size_t>(i)];
    if (w < 0 || w >= n) throw std::out_of_range("apply_unitary: wire out of range");
    mask |= bit_of(n, w);
  }
  for (std::size_t l = 0; l < local; ++l)
    for (int i = 0; i < k; ++i)
      if ((l >> (k - 1 - i)) & 1u) offset[l] |= bit_of(n, wires[static_cast<std::size_t>(i)]);

  Eigen::VectorXcd in(static_cast<Eigen::Index>(local)), out(static_cast<Eigen::Index>(local));
  const std::uint64_t dim = static_cast<std::uint64_t>(m.rows());
  for (std::uint64_t base = 0; base < dim; base = ((base | mask) + 1) & ~mask) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      for (std::size_t l = 0; l < local; ++l)
        in(static_cast<Eigen::Index>(l)) = m(static_cast<Eigen::Index>(base | offset[l]), col);
      out.noalias() = u * in;
      for (std::size_t l = 0; l < local; ++l)
        m(static_cast<Eigen::Index>(base | offset[l]), col) = out(static_cast<Eigen::Index>(l));
    }
  }
}

// Calls fn(r0, c0, r1, c1) for each 2x2 block of `wire`.
template <typename Fn>
void for_each_block(const CMatrix& rho, int wire, Fn&& fn) {
  const int n = dense_qubits(rho);
  if (wire < 0 || wire >= n) throw std::out_of_range("kernel: wire out of range");
  const std::uint64_t b = bit_of(n, wire);
  const std::uint64_t dim = static_cast<std::uint64_t>(rho.rows());
  for (std::uint64_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & b) continue;
    for (std::uint64_t c0 = 0; c0 < dim; ++c0) {
      if (c0 & b) continue;
      fn(static_cast<Eigen::Index>(r0), static_cast<Eigen::Index>(c0), static_cast<Eigen::Index>(r0 | b),
         static_cast<Eigen::Index>(c0 | b));
    }
  }
}

}  // namespace

void apply_unitary(CMatrix& rho, const CMatrix& u, std::span<const int> wires) {
  left_apply(rho, u, wires);
  rho.adjointInPlace();
  left_apply(rho, u, wires);
  rho.adjointInPlace();
}

void depolarize(CMatrix& rho, int wire, double p) {
  const double keep = 1.0 - p;
  for_each_block(rho, wire, [&](Eigen::Index r0, Eigen::Index c0, Eigen::Index r1, Eigen::Index c1) {
    const cplx half_trace = 0.5 * (rho(r0, c0) + rho(r1, c1));
    rho(r0, c0) = keep * rho(r0, c0) + p * half_trace;
    rho(r1, c1) = keep * rho(r1, c1) + p * half_trace;
    rho(r0, c1) *= keep;
    rho(r1, c0) *= keep;
  });
}

void apply_rsw(CMatrix& rho, const RswChannel& ch, int wire) {
  const int w[1] = {wire};
  apply_unitary(rho, ch.pre, w);
  const double l1 = ch.lambda1, l2 = ch.lambda2, l12 = ch.lambda1 * ch.lambda2, t = ch.t();
  for_each_block(rho, wire, [&](Eigen::Index r0, Eigen::Index c0, Eigen::Index r1, Eigen::Index c1) {
    const cplx a = rho(r0, c0), b = rho(r0, c1), c = rho(r1, c0), d = rho(r1, c1);
    rho(r0, c0) = 0.5 * ((a + d) * (1.0 + t) + l12 * (a - d));
    rho(r1, c1) = 0.5 * ((a + d) * (1.0 - t) - l12 * (a - d));
    rho(r0, c1) = 0.5 * (l1 * (b + c) + l2 * (b - c));
    rho(r1, c0) = 0.5 * (l1 * (b + c) - l2 * (b - c));
  });
  apply_unitary(rho, ch.post, w);
}

void apply_lowered(CMatrix& rho, const LoweredGate& g, std::span<const int> wires) {
  CMatrix acc = CMatrix::Zero(rho.rows(), rho.cols());
  if (const auto* mix = std::get_if<UnitaryMixture>(&g)) {
    for (std::size_t i = 0; i < mix->unitaries.size(); ++i) {
      CMatrix branch = rho;
      apply_unitary(branch, mix->unitaries[i], wires);
      acc += mix->probs[i] * branch;
    }
  } else {
    const auto& one = std::get<OneQubitGate>(g);
    if (wires.size() != 1) throw std::invalid_argument("apply_lowered: one-qubit gate on several wires");
    for (std::size_t i = 0; i < one.terms.size(); ++i) {
      CMatrix branch = rho;
      apply_rsw(branch, one.terms[i], wires[0]);
      acc += one.probs[i] * branch;
    }
  }
  rho = std::move(acc);
}

}  // namespace kernels

// ---------------------------------------------------------------------------
// Engines

namespace {

void check_cut(const Circuit& c, const Cut& cut) {
  if (!cut.is_valid(c)) throw std::invalid_argument("invalid cut: not downward closed for this circuit");
}

bool is_multi_qubit(const GatePlacement& g) { return g.wires.size() > 1; }

}  // namespace

HermitianOp evolve_density(const Circuit& c, const HermitianOp& op, const Cut& cut) {
  return evolve_density(CompiledCircuit(c), op, cut);
}

HermitianOp evolve_density(const CompiledCircuit& cc, const HermitianOp& op, const Cut& cut) {
  const Circuit& c = cc.circuit();
  if (op.num_qubits() != c.num_qubits()) throw std::invalid_argument("evolve_density: qubit count mismatch");
  check_cut(c, cut);
  CMatrix rho = op.matrix();
  for (const GateId& id : cut.gates()) {
    const GatePlacement& g = c.placement(id);
    if (is_multi_qubit(g)) {
      for (int w : g.wires) kernels::depolarize(rho, w, c.noise().epsk);
      kernels::apply_lowered(rho, cc.lowered(id), g.wires);
    } else {
      kernels::apply_lowered(rho, cc.lowered(id), g.wires);
      kernels::depolarize(rho, g.wires[0], c.noise().eps1);
    }
  }
  return HermitianOp::hermitized(rho);
}

CoeffVector evolve_pauli(const Circuit& c, const CoeffVector& v, const Cut& cut) {
  return evolve_pauli(CompiledCircuit(c), v, cut);
}

CoeffVector evolve_pauli(const CompiledCircuit& cc, const CoeffVector& v, const Cut& cut) {
  const Circuit& c = cc.circuit();
  if (v.num_qubits() != c.num_qubits()) throw std::invalid_argument("evolve_pauli: qubit count mismatch");
  check_cut(c, cut);
  CoeffVector out = v;
  for (const GateId& id : cut.gates()) {
    const GatePlacement& g = c.placement(id);
    if (is_multi_qubit(g)) {
      for (int w : g.wires) kernels::depolarize(out, w, c.noise().epsk);
      kernels::apply_ptm(out, cc.ptm(id).matrix, g.wires);
    } else {
      kernels::apply_ptm(out, cc.ptm(id).matrix, g.wires);
      kernels::depolarize(out, g.wires[0], c.noise().eps1);
    }
  }
  return out;
}

CoeffVector reduced_delta(const Circuit& c, const HermitianOp& delta0, const ConsistentSet& v) {
  return reduced_delta(CompiledCircuit(c), coeffs_from_op(delta0), v.qubits);
}

CoeffVector reduced_delta(const CompiledCircuit& cc, const CoeffVector& delta0, std::span<const QubitRef> v) {
  if (!is_consistent(v, cc.circuit())) throw CircuitError("reduced_delta: qubit set is not consistent");
  return reduced_delta(cc, delta0, v, Cut::minimal(cc.circuit(), v));
}

CoeffVector reduced_delta(const CompiledCircuit& cc, const CoeffVector& delta0, std::span<const QubitRef> v,
                          const Cut& cut) {
  const Circuit& c = cc.circuit();
  if (!is_consistent(v, c)) throw CircuitError("reduced_delta: qubit set is not consistent");
  check_cut(c, cut);
  std::vector<int> wires;
  for (const QubitRef& q : v) {
    if (cut.frontier(c, q.wire) != q.time)
      throw std::invalid_argument("reduced_delta: cut does not leave the set's qubits current");
    wires.push_back(q.wire);
  }
  std::sort(wires.begin(), wires.end());
  return restrict_coeffs(evolve_pauli(cc, delta0, cut), wires);
}

double output_distinguishability(const Circuit& c, const InputPair& pair) {
  return output_distinguishability(CompiledCircuit(c), coeffs_from_op(pair.delta()));
}

double output_distinguishability(const CompiledCircuit& cc, const CoeffVector& delta0) {
  const Circuit& c = cc.circuit();
  const CoeffVector evolved = evolve_pauli(cc, delta0, Cut::full(c));
  const int wire[1] = {c.output_wire()};
  const CoeffVector out = restrict_coeffs(evolved, wire);
  return 0.5 * std::abs(out.at(PauliString::parse("Z")));
}

double probability_of_one(const CompiledCircuit& cc, const HermitianOp& rho) {
  const Circuit& c = cc.circuit();
  const CMatrix final = evolve_density(cc, rho, Cut::full(c)).matrix();
  const int n = c.num_qubits();
  const std::uint64_t b = std::uint64_t{1} << (n - 1 - c.output_wire());
  double p = 0.0;
  for (Eigen::Index i = 0; i < final.rows(); ++i)
    if (static_cast<std::uint64_t>(i) & b) p += final(i, i).real();
  return p;
}

}  // namespace noisebound
