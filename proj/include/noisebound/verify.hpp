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
#include <string>
#include <vector>

#include "noisebound/linalg.hpp"

namespace noisebound {

/// Outcome of one seeded property suite.
struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;

  bool ok() const { return passed == total; }
};

// Each suite draws `cases` seeded random instances.
SuiteResult verify_engine_equivalence(std::uint64_t seed, int cases);
SuiteResult verify_unitary_sum_of_squares(std::uint64_t seed, int cases);
SuiteResult verify_trace_out(std::uint64_t seed, int cases);
SuiteResult verify_noise_shrink(std::uint64_t seed, int cases);
SuiteResult verify_outcome_distance(std::uint64_t seed, int cases);
SuiteResult verify_convexity(std::uint64_t seed, int cases);
SuiteResult verify_one_qubit_beta(std::uint64_t seed, int cases);
/// The 16 CNOT conjugations; empty when cases == 0.
SuiteResult verify_cnot_table(int cases);

std::vector<SuiteResult> run_verification(std::uint64_t seed, int cases);

/// Dense partial trace keeping `keep` (ascending wires) of an n-qubit operator.
CMatrix partial_trace(const CMatrix& m, int n, const std::vector<int>& keep);

}  // namespace noisebound
