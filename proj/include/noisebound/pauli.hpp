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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "noisebound/linalg.hpp"

namespace noisebound {

/// One-qubit Pauli, valued by its (x, z) bits as x | z << 1.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// Tensor product of one-qubit Paulis on n qubits in symplectic form.
///
/// Qubit q owns bit q of both masks. As a matrix, qubit 0 is the leftmost
/// Kronecker factor. The coefficient index of a string stores qubit q in bits
/// (2q, 2q+1) with the site code x | z << 1, so I=0, X=1, Z=2, Y=3.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);
  PauliString(int n, std::uint64_t x_bits, std::uint64_t z_bits);

  static PauliString from_index(int n, std::uint64_t index);
  /// Parses "XIZ" style strings; qubit 0 first.
  static PauliString parse(std::string_view text);

  int num_qubits() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  Pauli at(int q) const;
  void set(int q, Pauli p);

  std::uint64_t support() const { return x_ | z_; }
  int weight() const;
  std::uint64_t index() const;
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Dense 2^n x 2^n matrix of a Pauli string.
CMatrix pauli_matrix(const PauliString& s);

/// Hermitian operator on n qubits, stored densely.
class HermitianOp {
 public:
  /// Validates shape, size cap and Hermiticity.
  static HermitianOp from_matrix(CMatrix m);
  /// Symmetrizes (m + m^dagger)/2 without checking; for engine outputs.
  static HermitianOp hermitized(const CMatrix& m);
  static HermitianOp zero(int n);

  int num_qubits() const { return n_; }
  const CMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

 private:
  HermitianOp(int n, CMatrix m) : n_(n), m_(std::move(m)) {}
  int n_ = 0;
  CMatrix m_;
};

/// The 4^n real Pauli coefficients Tr(op S) of a Hermitian operator.
class CoeffVector {
 public:
  CoeffVector() = default;
  explicit CoeffVector(int n);
  CoeffVector(int n, std::vector<double> values);

  int num_qubits() const { return n_; }
  std::size_t size() const { return values_.size(); }

  double operator[](std::uint64_t index) const { return values_[index]; }
  double& operator[](std::uint64_t index) { return values_[index]; }
  double at(const PauliString& s) const;
  double& at(const PauliString& s);

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

CoeffVector coeffs_from_op(const HermitianOp& op);
HermitianOp op_from_coeffs(const CoeffVector& v);
double sum_of_squares(const CoeffVector& v);
double max_abs_diff(const CoeffVector& a, const CoeffVector& b);

/// Coefficients of the partial trace onto `wires`: result[S] = v[S on wires,
/// identity elsewhere]. Local qubit i of the result is wires[i].
CoeffVector restrict_coeffs(const CoeffVector& v, std::span<const int> wires);

struct ConjugationResult {
  bool is_pauli = false;
  PauliString pauli;
  int sign = 0;
  /// U S U^dagger, always filled.
  CMatrix matrix;
};

/// Computes U S U^dagger by dense multiplication and recognizes +-S'.
ConjugationResult pauli_conjugation_oracle(const CMatrix& u, const PauliString& s);

}  // namespace noisebound
