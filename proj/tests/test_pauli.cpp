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

#include <cmath>

#include "noisebound/linalg.hpp"
#include "noisebound/pauli.hpp"
#include "noisebound/random.hpp"

using namespace noisebound;

namespace {

CMatrix diag(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("pauli strings encode sites in x/z masks") {
  const PauliString s = PauliString::parse("XIZY");
  CHECK(s.num_qubits() == 4);
  CHECK(s.at(0) == Pauli::X);
  CHECK(s.at(1) == Pauli::I);
  CHECK(s.at(2) == Pauli::Z);
  CHECK(s.at(3) == Pauli::Y);
  CHECK(s.x_bits() == 0b1001);
  CHECK(s.z_bits() == 0b1100);
  CHECK(s.support() == 0b1101);
  CHECK(s.weight() == 3);
  CHECK(s.to_string() == "XIZY");
  CHECK(PauliString::from_index(4, s.index()) == s);
  CHECK_THROWS(PauliString::parse("XQ"));
  CHECK_THROWS(PauliString(2, 0b100, 0));
}

TEST_CASE("index order enumerates every string once") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<char> seen(std::size_t{1} << (2 * n), 0);
    for (std::uint64_t i = 0; i < seen.size(); ++i) {
      const PauliString s = PauliString::from_index(n, i);
      CHECK(s.index() == i);
      seen[i] = 1;
    }
  }
}

TEST_CASE("pauli strings are orthogonal") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::vector<CMatrix> mats;
    for (std::uint64_t i = 0; i < count; ++i) mats.push_back(pauli_matrix(PauliString::from_index(n, i)));
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        const cplx tr = (mats[a] * mats[b]).trace();
        const double expected = a == b ? std::ldexp(1.0, n) : 0.0;
        CHECK(std::abs(tr - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("coefficients of diag(1,-1)") {
  const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(diag(1, -1)));
  CHECK(v.at(PauliString::parse("Z")) == doctest::Approx(2.0));
  CHECK(v.at(PauliString::parse("I")) == doctest::Approx(0.0));
  CHECK(v.at(PauliString::parse("X")) == doctest::Approx(0.0));
  CHECK(v.at(PauliString::parse("Y")) == doctest::Approx(0.0));
  CHECK(sum_of_squares(v) == doctest::Approx(4.0));
  const CMatrix m = diag(1, -1);
  CHECK(2.0 * (m * m).trace().real() == doctest::Approx(4.0));
}

TEST_CASE("zero operator has zero coefficients") {
  const CoeffVector v = coeffs_from_op(HermitianOp::zero(2));
  for (double x : v.values()) CHECK(x == 0.0);
  CHECK(sum_of_squares(v) == 0.0);
  CHECK(sum_of_squares(CoeffVector(3)) == 0.0);
}

TEST_CASE("coefficients match a direct trace") {
  Rng rng(11);
  const CMatrix m = random_hermitian_matrix(rng, 3);
  const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(m));
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    const cplx direct = (m * pauli_matrix(PauliString::from_index(3, i))).trace();
    CHECK(std::abs(direct.imag()) < 1e-12);
    CHECK(std::abs(direct.real() - v[i]) < 1e-12);
  }
}

TEST_CASE("op_from_coeffs builds the expected matrices") {
  CoeffVector v(1);
  v.at(PauliString::parse("I")) = 2.0;
  CHECK(op_from_coeffs(v).matrix().isApprox(CMatrix::Identity(2, 2)));
  CoeffVector z(1);
  z.at(PauliString::parse("Z")) = 2.0;
  CHECK(op_from_coeffs(z).matrix().isApprox(diag(1, -1)));
}

TEST_CASE("round trips between operators and coefficients") {
  Rng rng(3);
  for (int n = 1; n <= 4; ++n) {
    const CMatrix m = random_hermitian_matrix(rng, n);
    const CMatrix back = op_from_coeffs(coeffs_from_op(HermitianOp::from_matrix(m))).matrix();
    CHECK((back - m).cwiseAbs().maxCoeff() < 1e-10);
  }
  for (int n = 1; n <= 3; ++n) {
    CoeffVector v(n);
    for (double& x : v.values()) x = rng.normal();
    CHECK(max_abs_diff(coeffs_from_op(op_from_coeffs(v)), v) < 1e-10);
    const CMatrix m = op_from_coeffs(v).matrix();
    CHECK(std::abs(sum_of_squares(v) - std::ldexp(1.0, n) * (m * m).trace().real()) < 1e-10);
  }
}

TEST_CASE("sum of squares of a pure-state difference") {
  Rng rng(5);
  const CMatrix d = random_pure_density(rng, 2) - random_pure_density(rng, 2);
  const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(d));
  CHECK(std::abs(sum_of_squares(v) / 4.0 - (d * d).trace().real()) < 1e-10);
}

TEST_CASE("operator validation") {
  CMatrix bad = CMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS(HermitianOp::from_matrix(bad));
  CHECK_THROWS(HermitianOp::from_matrix(CMatrix::Identity(3, 3)));
  CHECK_THROWS(HermitianOp::from_matrix(CMatrix::Zero(2, 4)));
}

TEST_CASE("restriction keeps identity-padded coefficients") {
  Rng rng(9);
  const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 3)));
  const std::vector<int> wires = {2, 0};
  const CoeffVector r = restrict_coeffs(v, wires);
  CHECK(r.num_qubits() == 2);
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    const PauliString local = PauliString::from_index(2, i);
    PauliString full(3);
    full.set(2, local.at(0));
    full.set(0, local.at(1));
    CHECK(r[i] == v.at(full));
  }
}

TEST_CASE("conjugation oracle") {
  SUBCASE("identity fixes X") {
    const auto r = pauli_conjugation_oracle(CMatrix::Identity(2, 2), PauliString::parse("X"));
    CHECK(r.is_pauli);
    CHECK(r.pauli == PauliString::parse("X"));
    CHECK(r.sign == 1);
  }
  SUBCASE("Hadamard negates Y") {
    const auto r = pauli_conjugation_oracle(mat::hadamard(), PauliString::parse("Y"));
    CHECK(r.is_pauli);
    CHECK(r.pauli == PauliString::parse("Y"));
    CHECK(r.sign == -1);
  }
  SUBCASE("CNOT sends YY to -XZ") {
    const auto r = pauli_conjugation_oracle(mat::cnot(), PauliString::parse("YY"));
    CHECK(r.is_pauli);
    CHECK(r.pauli == PauliString::parse("XZ"));
    CHECK(r.sign == -1);
  }
  SUBCASE("T gate leaves the Pauli group") {
    const auto r = pauli_conjugation_oracle(mat::phase_t(), PauliString::parse("X"));
    CHECK_FALSE(r.is_pauli);
    CHECK(r.matrix.rows() == 2);
  }
  SUBCASE("non-unitary input is rejected") {
    CHECK_THROWS(pauli_conjugation_oracle(2.0 * CMatrix::Identity(2, 2), PauliString::parse("X")));
  }
}
