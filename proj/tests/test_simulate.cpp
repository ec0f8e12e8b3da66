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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "noisebound/io.hpp"
#include "noisebound/random.hpp"
#include "noisebound/simulate.hpp"
#include "oracles.hpp"

using namespace noisebound;

namespace {

const std::vector<std::string> kPool = {"CNOT", "H", "S", "T", "RESET", "ID", "RANDMIX2", "RANDU3", "RANDRSW", "CZ"};

Circuit id_chain(int levels, double eps1) {
  std::vector<Circuit::Level> ls(static_cast<std::size_t>(levels), {GatePlacement{{0}, GateSpec(Builtin::ID)}});
  return Circuit(1, ls, NoiseModel{eps1, 0.4}, 0);
}

HermitianOp z_diff() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return HermitianOp::from_matrix(m);
}

}  // namespace

TEST_CASE("cuts are downward closed") {
  const Circuit c = random_circuit(3, 3, 2, kPool, 3);
  CHECK(Cut::empty(c).gates().empty());
  CHECK(Cut::full(c).is_valid(c));
  CHECK(Cut::prefix(c, 2).is_valid(c));
  CHECK(Cut::full(c).frontier(c, 1) == 3);
  CHECK(Cut::prefix(c, 2).frontier(c, 0) == 2);

  const std::vector<GateId> only_last = {GateId{3, 0}};
  CHECK_FALSE(Cut::from_gates(c, only_last).is_valid(c));
  const std::vector<QubitRef> v = {{0, 2}};
  const Cut minimal = Cut::minimal(c, v);
  CHECK(minimal.is_valid(c));
  CHECK(minimal.frontier(c, 0) == 2);
  CHECK(Cut::maximal(c, v).is_valid(c));
  CHECK(Cut::maximal(c, v).frontier(c, 0) == 2);
}

TEST_CASE("engines on small examples") {
  const Circuit one = id_chain(1, 0.1);
  CHECK(evolve_density(one, z_diff(), Cut::empty(one)).matrix() == z_diff().matrix());
  const CoeffVector out = coeffs_from_op(evolve_density(one, z_diff(), Cut::full(one)));
  CHECK(out.at(PauliString::parse("Z")) == doctest::Approx(2.0 * 0.9));

  const Circuit depol(2, {{GatePlacement{{0}, GateSpec(DepolGate{1.0})}, GatePlacement{{1}, GateSpec(Builtin::ID)}}},
                      NoiseModel{1e-9, 0.0}, 0);
  Rng rng(1);
  const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 2)));
  const CoeffVector w = evolve_pauli(depol, v, Cut::full(depol));
  for (std::uint64_t i = 0; i < w.size(); ++i)
    if (PauliString::from_index(2, i).at(0) != Pauli::I) CHECK(w[i] == 0.0);
}

TEST_CASE("unitary levels preserve the sum of squares") {
  const Circuit c = parse_circuit(
      "qubits 3 levels 2 output 0\nnoise eps1=1e-300 epsk=0\nlevel 1: CNOT(0,1); H(2)\nlevel 2: CZ(2,0); T(1)\n");
  Rng rng(6);
  const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 3)));
  CHECK(std::abs(sum_of_squares(evolve_pauli(c, v, Cut::full(c))) - sum_of_squares(v)) < 1e-9);
}

TEST_CASE("density engine matches an embedded-operator reference") {
  Rng rng(12);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Circuit c = random_circuit(3, 3, seed, kPool, 3, NoiseModel{0.07, 0.3});
    const CMatrix d = random_hermitian_matrix(rng, 3);
    const CMatrix ref = oracle::reference_evolve(c, d);
    const CMatrix got = evolve_density(c, HermitianOp::from_matrix(d), Cut::full(c)).matrix();
    CHECK((ref - got).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("Pauli and density engines agree") {
  Rng rng(13);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const Circuit c = random_circuit(n, 1 + static_cast<int>(seed % 5), seed, kPool, 3,
                                     NoiseModel{rng.uniform(0.01, 0.5), rng.uniform()});
    const HermitianOp d = HermitianOp::from_matrix(random_hermitian_matrix(rng, n));
    const CompiledCircuit cc(c);
    for (int t = 0; t <= c.num_levels(); ++t) {
      const Cut cut = Cut::prefix(c, t);
      CHECK(max_abs_diff(coeffs_from_op(evolve_density(cc, d, cut)), evolve_pauli(cc, coeffs_from_op(d), cut)) <
            1e-9);
    }
  }
}

TEST_CASE("engines are linear") {
  Rng rng(14);
  const Circuit c = random_circuit(3, 4, 3, kPool, 3);
  const CoeffVector a = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 3)));
  const CoeffVector b = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 3)));
  CoeffVector combo(3);
  for (std::uint64_t i = 0; i < combo.size(); ++i) combo[i] = 0.3 * a[i] - 1.7 * b[i];
  const CoeffVector ea = evolve_pauli(c, a, Cut::full(c)), eb = evolve_pauli(c, b, Cut::full(c));
  const CoeffVector ec = evolve_pauli(c, combo, Cut::full(c));
  for (std::uint64_t i = 0; i < combo.size(); ++i) CHECK(std::abs(ec[i] - (0.3 * ea[i] - 1.7 * eb[i])) < 1e-9);
}

TEST_CASE("density matrices stay states") {
  Rng rng(15);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_circuit(3, 3, seed, kPool, 3);
    const HermitianOp rho = HermitianOp::from_matrix(random_pure_density(rng, 3));
    for (int t = 0; t <= 3; ++t) {
      const CMatrix out = evolve_density(c, rho, Cut::prefix(c, t)).matrix();
      CHECK(std::abs(out.trace().real() - 1.0) < 1e-10);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(out);
      CHECK(es.eigenvalues().minCoeff() > -1e-9);
    }
  }
}

TEST_CASE("depolarizing never grows a coefficient") {
  Rng rng(16);
  CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 3)));
  for (int i = 0; i < 20; ++i) {
    const CoeffVector before = v;
    kernels::depolarize(v, static_cast<int>(rng.below(3)), rng.uniform());
    for (std::uint64_t j = 0; j < v.size(); ++j) CHECK(std::abs(v[j]) <= std::abs(before[j]));
  }
}

TEST_CASE("convexity at engine level") {
  Rng rng(19);
  for (int i = 0; i < 20; ++i) {
    MixtureGate mix{{0.2, 0.3, 0.5}, {haar_unitary(rng, 2), haar_unitary(rng, 2), haar_unitary(rng, 2)}};
    const auto with_gate = [&](GateSpec g) {
      return Circuit(3, {{GatePlacement{{2, 0}, std::move(g)}, GatePlacement{{1}, GateSpec(Builtin::H)}}},
                     NoiseModel{0.1, 0.2}, 0);
    };
    const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 3)));
    const Circuit mixed = with_gate(GateSpec(mix));
    double average = 0.0;
    for (std::size_t b = 0; b < 3; ++b) {
      const Circuit branch = with_gate(GateSpec(UnitaryGate{mix.unitaries[b]}));
      average += mix.probs[b] * sum_of_squares(evolve_pauli(branch, v, Cut::full(branch)));
    }
    CHECK(sum_of_squares(evolve_pauli(mixed, v, Cut::full(mixed))) <= average + 1e-9);
  }
}

TEST_CASE("reduced differences") {
  Rng rng(21);
  const Circuit c = random_circuit(3, 2, 4, kPool, 3);
  const InputPair pair = InputPair::make(random_pure_density(rng, 3), random_pure_density(rng, 3));
  const HermitianOp delta = pair.delta();

  const ConsistentSet time0 = make_consistent_set({{0, 0}, {1, 0}, {2, 0}}, c);
  CHECK(max_abs_diff(reduced_delta(c, delta, time0), coeffs_from_op(delta)) < 1e-12);

  const ConsistentSet none = make_consistent_set({}, c);
  const CoeffVector empty = reduced_delta(c, delta, none);
  REQUIRE(empty.size() == 1);
  CHECK(std::abs(empty[0]) < 1e-12);

  const CompiledCircuit cc(c);
  const CoeffVector d0 = coeffs_from_op(delta);
  for (const ConsistentSet& v : enumerate_consistent_sets(c, 3)) {
    const CoeffVector minimal = reduced_delta(cc, d0, v.qubits);
    const CoeffVector maximal = reduced_delta(cc, d0, v.qubits, Cut::maximal(c, v.qubits));
    CHECK(max_abs_diff(minimal, maximal) < 1e-9);

    std::vector<int> wires;
    for (const QubitRef& q : v.qubits) wires.push_back(q.wire);
    if (v.qubits.empty() || v.dist != v.latest) continue;
    const CMatrix full = oracle::reference_evolve(c, delta.matrix(), v.latest);
    const CMatrix traced = oracle::partial_trace(full, 3, wires);
    CHECK(max_abs_diff(minimal, coeffs_from_op(HermitianOp::hermitized(traced))) < 1e-9);
  }

  const std::vector<QubitRef> inconsistent = {{0, 0}, {0, 2}};
  CHECK_THROWS(reduced_delta(cc, d0, inconsistent));
}

TEST_CASE("output distinguishability") {
  const Circuit chain = id_chain(10, 0.01);
  CHECK(std::abs(output_distinguishability(chain, InputPair::basis(1, 0, 1)) - std::pow(0.99, 10)) < 1e-12);
  CHECK(std::abs(output_distinguishability(chain, InputPair::basis(1, 0, 1)) - 0.904382075) < 1e-9);

  Rng rng(22);
  const Circuit c = random_circuit(3, 4, 9, kPool, 3);
  const CMatrix rho = random_pure_density(rng, 3);
  CHECK(output_distinguishability(c, InputPair::make(rho, rho)) == 0.0);
  for (int i = 0; i < 5; ++i) {
    const CMatrix a = random_pure_density(rng, 3), b = random_pure_density(rng, 3);
    const double born = std::abs(oracle::born_one(oracle::reference_evolve(c, a), c.output_wire(), 3) -
                                 oracle::born_one(oracle::reference_evolve(c, b), c.output_wire(), 3));
    CHECK(std::abs(output_distinguishability(c, InputPair::make(a, b)) - born) < 1e-10);
  }
}

TEST_CASE("input pairs") {
  CHECK(is_density_matrix(InputPair::basis(2, 1, 2).rho.matrix()));
  CHECK_THROWS(InputPair::make(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)));
  CHECK_THROWS(InputPair::make(0.5 * CMatrix::Identity(2, 2), 0.25 * CMatrix::Identity(4, 4)));
  const InputPair p = InputPair::basis(2, 0b01, 0b10);
  CHECK(p.rho.matrix()(2, 2) == cplx(1.0));  // qubit 0 set: leftmost factor |1>
  CHECK(p.tau.matrix()(1, 1) == cplx(1.0));
}
