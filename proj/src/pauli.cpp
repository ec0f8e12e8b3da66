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

#include "noisebound/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace noisebound {

namespace {

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Qubit q sits at basis-index bit n-1-q.
std::uint64_t to_basis_mask(std::uint64_t qubit_bits, int n) {
  std::uint64_t out = 0;
  for (int q = 0; q < n; ++q)
    if ((qubit_bits >> q) & 1u) out |= std::uint64_t{1} << (n - 1 - q);
  return out;
}

cplx i_power(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

PauliString::PauliString(int n) : PauliString(n, 0, 0) {}

PauliString::PauliString(int n, std::uint64_t x_bits, std::uint64_t z_bits) : n_(n), x_(x_bits), z_(z_bits) {
  if (n < 0 || n > 32) throw std::invalid_argument("PauliString: qubit count out of range");
  if ((x_bits | z_bits) & ~low_mask(n)) throw std::invalid_argument("PauliString: mask bits above qubit count");
}

PauliString PauliString::from_index(int n, std::uint64_t index) {
  std::uint64_t x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t code = (index >> (2 * q)) & 3u;
    x |= (code & 1u) << q;
    z |= (code >> 1) << q;
  }
  if (n < 32 && (index >> (2 * n)) != 0) throw std::invalid_argument("PauliString: index out of range");
  return PauliString(n, x, z);
}

PauliString PauliString::parse(std::string_view text) {
  PauliString s(static_cast<int>(text.size()));
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': s.set(static_cast<int>(q), Pauli::X); break;
      case 'Y': s.set(static_cast<int>(q), Pauli::Y); break;
      case 'Z': s.set(static_cast<int>(q), Pauli::Z); break;
      default: throw std::invalid_argument("PauliString: bad character '" + std::string(1, text[q]) + "'");
    }
  }
  return s;
}

Pauli PauliString::at(int q) const {
  return static_cast<Pauli>(((x_ >> q) & 1u) | (((z_ >> q) & 1u) << 1));
}

void PauliString::set(int q, Pauli p) {
  if (q < 0 || q >= n_) throw std::out_of_range("PauliString::set: qubit out of range");
  const auto code = static_cast<std::uint64_t>(p);
  x_ = (x_ & ~(std::uint64_t{1} << q)) | ((code & 1u) << q);
  z_ = (z_ & ~(std::uint64_t{1} << q)) | ((code >> 1) << q);
}

int PauliString::weight() const { return std::popcount(support()); }

std::uint64_t PauliString::index() const {
  std::uint64_t idx = 0;
  for (int q = 0; q < n_; ++q) idx |= static_cast<std::uint64_t>(at(q)) << (2 * q);
  return idx;
}

std::string PauliString::to_string() const {
  std::string out;
  out.reserve(n_);
  for (int q = 0; q < n_; ++q) out.push_back(pauli_char(at(q)));
  return out;
}

CMatrix pauli_matrix(const PauliString& s) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < s.num_qubits(); ++q) {
    switch (s.at(q)) {
      case Pauli::I: out = kron(out, mat::identity(1)); break;
      case Pauli::X: out = kron(out, mat::pauli_x()); break;
      case Pauli::Y: out = kron(out, mat::pauli_y()); break;
      case Pauli::Z: out = kron(out, mat::pauli_z()); break;
    }
  }
  return out;
}

HermitianOp HermitianOp::from_matrix(CMatrix m) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows()))
    throw std::invalid_argument("HermitianOp: dimension is not a power of 2");
  const int n = log2_exact(m.rows());
  if (n > kMaxDenseQubits) throw std::invalid_argument("HermitianOp: exceeds dense qubit cap");
  if (!is_hermitian(m)) throw std::invalid_argument("HermitianOp: matrix is not Hermitian");
  return HermitianOp(n, std::move(m));
}

HermitianOp HermitianOp::hermitized(const CMatrix& m) {
  if (m.rows() != m.cols() || !is_power_of_two(m.rows()))
    throw std::invalid_argument("HermitianOp: dimension is not a power of 2");
  return HermitianOp(log2_exact(m.rows()), (m + m.adjoint()) * 0.5);
}

HermitianOp HermitianOp::zero(int n) {
  if (n < 0 || n > kMaxDenseQubits) throw std::invalid_argument("HermitianOp: exceeds dense qubit cap");
  const Eigen::Index d = Eigen::Index{1} << n;
  return HermitianOp(n, CMatrix::Zero(d, d));
}

CoeffVector::CoeffVector(int n) {
  if (n < 0 || n > kMaxPauliQubits) throw std::invalid_argument("CoeffVector: exceeds Pauli engine qubit cap");
  n_ = n;
  values_.assign(std::size_t{1} << (2 * n), 0.0);
}

CoeffVector::CoeffVector(int n, std::vector<double> values) : CoeffVector(n) {
  if (values.size() != values_.size()) throw std::invalid_argument("CoeffVector: expected 4^n values");
  values_ = std::move(values);
}

double CoeffVector::at(const PauliString& s) const {
  if (s.num_qubits() != n_) throw std::invalid_argument("CoeffVector::at: qubit count mismatch");
  return values_[s.index()];
}

double& CoeffVector::at(const PauliString& s) {
  if (s.num_qubits() != n_) throw std::invalid_argument("CoeffVector::at: qubit count mismatch");
  return values_[s.index()];
}

CoeffVector coeffs_from_op(const HermitianOp& op) {
  const int n = op.num_qubits();
  const CMatrix& m = op.matrix();
  const std::uint64_t dim = std::uint64_t{1} << n;
  CoeffVector out(n);
  for (std::uint64_t idx = 0; idx < out.size(); ++idx) {
    const PauliString s = PauliString::from_index(n, idx);
    const std::uint64_t xm = to_basis_mask(s.x_bits(), n);
    const std::uint64_t zm = to_basis_mask(s.z_bits(), n);
    cplx acc = 0;
    for (std::uint64_t c = 0; c < dim; ++c) {
      const cplx entry = m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ xm));
      acc += (std::popcount(c & zm) & 1) ? -entry : entry;
    }
    acc *= i_power(std::popcount(s.x_bits() & s.z_bits()));
    // Hermitian input makes the imaginary residue roundoff only.
    out[idx] = acc.real();
  }
  return out;
}

HermitianOp op_from_coeffs(const CoeffVector& v) {
  const int n = v.num_qubits();
  if (n > kMaxDenseQubits) throw std::invalid_argument("op_from_coeffs: exceeds dense qubit cap");
  const std::uint64_t dim = std::uint64_t{1} << n;
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::uint64_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0.0) continue;
    const PauliString s = PauliString::from_index(n, idx);
    const std::uint64_t xm = to_basis_mask(s.x_bits(), n);
    const std::uint64_t zm = to_basis_mask(s.z_bits(), n);
    const cplx phase = i_power(std::popcount(s.x_bits() & s.z_bits())) * (v[idx] * scale);
    for (std::uint64_t c = 0; c < dim; ++c) {
      const cplx term = (std::popcount(c & zm) & 1) ? -phase : phase;
      m(static_cast<Eigen::Index>(c ^ xm), static_cast<Eigen::Index>(c)) += term;
    }
  }
  return HermitianOp::hermitized(m);
}

double sum_of_squares(const CoeffVector& v) {
  double acc = 0.0;
  for (double c : v.values()) acc += c * c;
  return acc;
}

double max_abs_diff(const CoeffVector& a, const CoeffVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("max_abs_diff: qubit count mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

CoeffVector restrict_coeffs(const CoeffVector& v, std::span<const int> wires) {
  const int n = v.num_qubits();
  const int m = static_cast<int>(wires.size());
  std::uint64_t seen = 0;
  for (int w : wires) {
    if (w < 0 || w >= n) throw std::out_of_range("restrict_coeffs: wire out of range");
    if ((seen >> w) & 1u) throw std::invalid_argument("restrict_coeffs: duplicate wire");
    seen |= std::uint64_t{1} << w;
  }
  CoeffVector out(m);
  for (std::uint64_t local = 0; local < out.size(); ++local) {
    std::uint64_t global = 0;
    for (int i = 0; i < m; ++i) global |= ((local >> (2 * i)) & 3u) << (2 * wires[i]);
    out[local] = v[global];
  }
  return out;
}

ConjugationResult pauli_conjugation_oracle(const CMatrix& u, const PauliString& s) {
  if (!is_unitary(u)) throw std::invalid_argument("pauli_conjugation_oracle: matrix is not unitary");
  const int k = s.num_qubits();
  if (u.rows() != (Eigen::Index{1} << k)) throw std::invalid_argument("pauli_conjugation_oracle: dimension mismatch");
  ConjugationResult result;
  result.matrix = u * pauli_matrix(s) * u.adjoint();
  const double dim = static_cast<double>(u.rows());
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const PauliString candidate = PauliString::from_index(k, idx);
    const CMatrix p = pauli_matrix(candidate);
    const cplx overlap = (p * result.matrix).trace() / dim;
    for (int sign : {1, -1}) {
      if (std::abs(overlap - cplx(sign, 0)) > kUnitaryTol) continue;
      if ((result.matrix - static_cast<double>(sign) * p).cwiseAbs().maxCoeff() <= kUnitaryTol) {
        result.is_pauli = true;
        result.pauli = candidate;
        result.sign = sign;
        return result;
      }
    }
  }
  return result;
}

}  // namespace noisebound
