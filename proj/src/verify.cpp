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

#include "noisebound/verify.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "noisebound/channels.hpp"
#include "noisebound/circuit.hpp"
#include "noisebound/random.hpp"
#include "noisebound/simulate.hpp"

namespace noisebound {

namespace {

constexpr double kTol = 1e-9;

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++result_.total;
    if (ok) {
      ++result_.passed;
    } else if (result_.first_failure.empty()) {
      result_.first_failure = what;
    }
  }
  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

std::string describe(const char* what, int index, double value) {
  std::ostringstream out;
  out << what << " case " << index << ": deviation " << value;
  return out.str();
}

const std::vector<std::string>& mixed_pool() {
  static const std::vector<std::string> pool = {"CNOT", "H", "S", "T", "RESET", "ID", "RANDMIX2"};
  return pool;
}

Circuit random_test_circuit(Rng& rng, int max_n, int max_t) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
  const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_t)));
  const NoiseModel noise{rng.uniform(0.01, 0.5), rng.uniform(0.0, 1.0)};
  return random_circuit(n, t, rng.next_u64(), mixed_pool(), 2, noise);
}

CoeffVector random_coeffs(Rng& rng, int n) {
  CoeffVector v(n);
  for (double& x : v.values()) x = rng.normal();
  return v;
}

std::vector<int> random_wires(Rng& rng, int n, int k) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
  all.resize(static_cast<std::size_t>(k));
  return all;
}

}  // namespace

CMatrix partial_trace(const CMatrix& m, int n, const std::vector<int>& keep) {
  const int kept = static_cast<int>(keep.size());
  std::uint64_t keep_mask = 0;
  for (int w : keep) keep_mask |= std::uint64_t{1} << (n - 1 - w);
  const auto local_index = [&](std::uint64_t full) {
    std::uint64_t out = 0;
    for (int i = 0; i < kept; ++i)
      if ((full >> (n - 1 - keep[static_cast<std::size_t>(i)])) & 1u) out |= std::uint64_t{1} << (kept - 1 - i);
    return static_cast<Eigen::Index>(out);
  };
  const Eigen::Index d = Eigen::Index{1} << kept;
  CMatrix out = CMatrix::Zero(d, d);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < dim; ++r)
    for (std::uint64_t c = 0; c < dim; ++c)
      if ((r & ~keep_mask) == (c & ~keep_mask))
        out(local_index(r), local_index(c)) += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

SuiteResult verify_engine_equivalence(std::uint64_t seed, int cases) {
  Tally tally("engine-equivalence");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Circuit c = random_test_circuit(rng, 4, 5);
    const HermitianOp delta = HermitianOp::from_matrix(random_hermitian_matrix(rng, c.num_qubits()));
    const CompiledCircuit cc(c);
    const Cut cut = Cut::full(c);
    const CoeffVector dense = coeffs_from_op(evolve_density(cc, delta, cut));
    const CoeffVector pauli = evolve_pauli(cc, coeffs_from_op(delta), cut);
    const double dev = max_abs_diff(dense, pauli);
    tally.check(dev <= kTol, describe("engine-equivalence", i, dev));
  }
  return tally.result();
}

SuiteResult verify_unitary_sum_of_squares(std::uint64_t seed, int cases) {
  Tally tally("unitary-sum-of-squares");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = k + static_cast<int>(rng.below(2));
    const Ptm ptm = ptm_of_unitary(haar_unitary(rng, k), k);
    CoeffVector v = random_coeffs(rng, n);
    const double before = sum_of_squares(v);
    kernels::apply_ptm(v, ptm.matrix, random_wires(rng, n, k));
    const double dev = std::abs(sum_of_squares(v) - before);
    tally.check(dev <= kTol, describe("unitary-sum-of-squares", i, dev));
  }
  return tally.result();
}

SuiteResult verify_trace_out(std::uint64_t seed, int cases) {
  Tally tally("trace-out");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const CMatrix delta = random_hermitian_matrix(rng, n);
    const CoeffVector full = coeffs_from_op(HermitianOp::from_matrix(delta));
    double worst = 0.0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
      std::vector<int> keep;
      for (int w = 0; w < n; ++w)
        if ((subset >> w) & 1u) keep.push_back(w);
      const CoeffVector traced = coeffs_from_op(HermitianOp::hermitized(partial_trace(delta, n, keep)));
      worst = std::max(worst, max_abs_diff(traced, restrict_coeffs(full, keep)));
    }
    tally.check(worst <= kTol, describe("trace-out", i, worst));
  }
  return tally.result();
}

SuiteResult verify_noise_shrink(std::uint64_t seed, int cases) {
  Tally tally("noise-shrink");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int wire = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const double p = rng.uniform();
    const CMatrix m = random_hermitian_matrix(rng, n);
    const CoeffVector before = coeffs_from_op(HermitianOp::from_matrix(m));
    CoeffVector after = before;
    kernels::depolarize(after, wire, p);
    bool exact = true;
    for (std::uint64_t idx = 0; idx < before.size(); ++idx) {
      const bool supported = ((idx >> (2 * wire)) & 3u) != 0;
      exact = exact && after[idx] == (supported ? (1.0 - p) * before[idx] : before[idx]);
    }
    CMatrix dense = m;
    kernels::depolarize(dense, wire, p);
    const double dev = max_abs_diff(coeffs_from_op(HermitianOp::hermitized(dense)), after);
    tally.check(exact && dev <= kTol, describe("noise-shrink", i, dev));
  }
  return tally.result();
}

SuiteResult verify_outcome_distance(std::uint64_t seed, int cases) {
  Tally tally("outcome-distance");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Circuit c = random_test_circuit(rng, 3, 4);
    const int n = c.num_qubits();
    const InputPair pair = InputPair::make(random_pure_density(rng, n), random_pure_density(rng, n));
    const CompiledCircuit cc(c);
    const double pauli = output_distinguishability(cc, coeffs_from_op(pair.delta()));
    const double born = std::abs(probability_of_one(cc, pair.rho) - probability_of_one(cc, pair.tau));
    const double dev = std::abs(pauli - born);
    tally.check(dev <= 1e-10, describe("outcome-distance", i, dev));
  }
  return tally.result();
}

SuiteResult verify_convexity(std::uint64_t seed, int cases) {
  Tally tally("convexity");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    const int k = 1 + static_cast<int>(rng.below(2));
    const int n = k + static_cast<int>(rng.below(2));
    const int terms = 2 + static_cast<int>(rng.below(3));
    UnitaryMixture mix{k, {}, {}};
    for (int j = 0; j < terms; ++j) {
      mix.probs.push_back(rng.uniform(0.05, 1.0));
      mix.unitaries.push_back(haar_unitary(rng, k));
    }
    const double total = std::accumulate(mix.probs.begin(), mix.probs.end(), 0.0);
    for (double& p : mix.probs) p /= total;
    const std::vector<int> wires = random_wires(rng, n, k);
    const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, n)));

    CoeffVector mixed = v;
    kernels::apply_ptm(mixed, ptm_of_mixture(mix).matrix, wires);
    double average = 0.0;
    for (int j = 0; j < terms; ++j) {
      CoeffVector branch = v;
      kernels::apply_ptm(branch, ptm_of_unitary(mix.unitaries[static_cast<std::size_t>(j)], k).matrix, wires);
      average += mix.probs[static_cast<std::size_t>(j)] * sum_of_squares(branch);
    }
    const double excess = sum_of_squares(mixed) - average;
    tally.check(excess <= kTol, describe("convexity", i, excess));
  }
  return tally.result();
}

SuiteResult verify_one_qubit_beta(std::uint64_t seed, int cases) {
  Tally tally("one-qubit-beta");
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    OneQubitGate g;
    if (i % 50 == 0) {
      g = {{1.0}, {RswChannel::reset()}};
    } else if (i % 50 == 1) {
      g = {{1.0}, {RswChannel::unitary(haar_unitary(rng, 1))}};
    } else {
      const int terms = 1 + static_cast<int>(rng.below(3));
      for (int j = 0; j < terms; ++j) {
        RswChannel ch;
        ch.lambda1 = rng.uniform(-1.0, 1.0);
        ch.lambda2 = rng.uniform(-1.0, 1.0);
        ch.t_sign = rng.below(2) == 0 ? 1 : -1;
        ch.pre = haar_unitary(rng, 1);
        ch.post = haar_unitary(rng, 1);
        g.terms.push_back(ch);
        g.probs.push_back(rng.uniform(0.05, 1.0));
      }
      const double total = std::accumulate(g.probs.begin(), g.probs.end(), 0.0);
      for (double& p : g.probs) p /= total;
    }
    const double beta = beta_of_gate(g);
    const CoeffVector d = coeffs_from_op(HermitianOp::from_matrix(random_hermitian_matrix(rng, 1)));
    const CoeffVector out = ptm_of_one_qubit(g).apply(d);
    const auto bloch = [](const CoeffVector& v) { return v[1] * v[1] + v[2] * v[2] + v[3] * v[3]; };
    const double lhs = bloch(out);
    const double rhs = (1.0 - beta) * d[0] * d[0] + beta * bloch(d);
    bool ok = lhs <= rhs + kTol && beta >= 0.0 && beta <= 1.0;
    if (i % 50 == 0) ok = ok && beta == 0.0;
    if (i % 50 == 1) ok = ok && beta == 1.0;
    tally.check(ok, describe("one-qubit-beta", i, lhs - rhs));
  }
  return tally.result();
}

SuiteResult verify_cnot_table(int cases) {
  Tally tally("cnot-table");
  if (cases <= 0) return tally.result();
  const CMatrix cnot = mat::cnot();
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const PauliString r = PauliString::from_index(2, idx);
    const SignedPauli action = cnot_pauli_action(r);
    const ConjugationResult oracle = pauli_conjugation_oracle(cnot, r);
    const bool matches = oracle.is_pauli && oracle.pauli == action.pauli && oracle.sign == action.sign;
    const Pauli c_in = r.at(0), t_in = r.at(1), c_out = action.pauli.at(0), t_out = action.pauli.at(1);
    const bool target_only_in = c_in == Pauli::I && t_in != Pauli::I;
    const bool control_only_in = c_in != Pauli::I && t_in == Pauli::I;
    const bool target_only_out = c_out == Pauli::I && t_out != Pauli::I;
    const bool control_only_out = c_out != Pauli::I && t_out == Pauli::I;
    const bool blocks = !(target_only_in && control_only_out) && !(control_only_in && target_only_out);
    tally.check(matches && blocks, "cnot-table: mismatch for " + r.to_string());
  }
  return tally.result();
}

std::vector<SuiteResult> run_verification(std::uint64_t seed, int cases) {
  return {
      verify_engine_equivalence(seed, cases),
      verify_unitary_sum_of_squares(seed + 1, cases),
      verify_trace_out(seed + 2, cases),
      verify_noise_shrink(seed + 3, cases),
      verify_outcome_distance(seed + 4, cases),
      verify_convexity(seed + 5, cases),
      verify_one_qubit_beta(seed + 6, cases),
      verify_cnot_table(cases),
  };
}

}  // namespace noisebound
