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
#include <random>

#include "noisebound/linalg.hpp"

namespace noisebound {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so we derive everything from
/// the raw 64-bit mt19937 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unitary on k qubits.
CMatrix haar_unitary(Rng& rng, int k);
/// Random Hermitian matrix with Gaussian entries, 2^n x 2^n.
CMatrix random_hermitian_matrix(Rng& rng, int n);
/// Haar-random pure state vector on n qubits.
Eigen::VectorXcd random_state_vector(Rng& rng, int n);
/// |psi><psi| for a Haar-random psi.
CMatrix random_pure_density(Rng& rng, int n);
/// Tensor product of independent one-qubit Haar-random pure states.
CMatrix random_product_density(Rng& rng, int n);
/// Computational basis projector |bits><bits|, bit i belonging to qubit i.
CMatrix basis_density(int n, std::uint64_t bits);

}  // namespace noisebound
