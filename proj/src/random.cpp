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

#include "noisebound/random.hpp"

#include <cmath>
#include <stdexcept>

namespace noisebound {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  has_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

CMatrix haar_unitary(Rng& rng, int k) {
  const Eigen::Index d = Eigen::Index{1} << k;
  CMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cplx(rng.normal(), rng.normal()) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the distribution is Haar.
  for (Eigen::Index j = 0; j < d; ++j) {
    const cplx diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(j) *= diag / mag;
  }
  return q;
}

CMatrix random_hermitian_matrix(Rng& rng, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  CMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
  return (g + g.adjoint()) * 0.5;
}

Eigen::VectorXcd random_state_vector(Rng& rng, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::VectorXcd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = cplx(rng.normal(), rng.normal());
  return v / v.norm();
}

CMatrix random_pure_density(Rng& rng, int n) {
  const Eigen::VectorXcd v = random_state_vector(rng, n);
  return v * v.adjoint();
}

CMatrix random_product_density(Rng& rng, int n) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) out = kron(out, random_pure_density(rng, 1));
  return out;
}

CMatrix basis_density(int n, std::uint64_t bits) {
  const Eigen::Index d = Eigen::Index{1} << n;
  std::uint64_t index = 0;
  for (int q = 0; q < n; ++q)
    if ((bits >> q) & 1u) index |= std::uint64_t{1} << (n - 1 - q);
  CMatrix out = CMatrix::Zero(d, d);
  out(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return out;
}

}  // namespace noisebound
