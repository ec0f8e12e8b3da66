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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace noisebound {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

// Largest dense operator (2^n x 2^n) we are willing to build.
inline constexpr int kMaxDenseQubits = 10;
// Largest Pauli coefficient vector (4^n entries).
inline constexpr int kMaxPauliQubits = 12;

bool is_power_of_two(std::int64_t d);
int log2_exact(std::int64_t d);

bool is_unitary(const CMatrix& u, double tol = kUnitaryTol);
bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);

/// Kronecker product a (x) b, with `a` acting on the more significant index.
CMatrix kron(const CMatrix& a, const CMatrix& b);

namespace mat {
CMatrix identity(int k);
CMatrix hadamard();
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix phase_s();
CMatrix phase_t();
CMatrix cnot();
CMatrix cz();
CMatrix swap();
}  // namespace mat

}  // namespace noisebound
