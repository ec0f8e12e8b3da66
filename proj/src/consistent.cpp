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

#include <algorithm>
#include <string>
#include <tuple>

#include "noisebound/circuit.hpp"

namespace noisebound {

namespace {

void check_refs(std::span<const QubitRef> v, const Circuit& c) {
  for (const QubitRef& q : v) {
    if (q.wire < 0 || q.wire >= c.num_qubits() || q.time < 0 || q.time > c.num_levels())
      throw std::out_of_range("qubit (" + std::to_string(q.wire) + "," + std::to_string(q.time) + ") out of range");
  }
}

// Walks the producing gates of V. `frontier[w]` ends as the highest level
// applied on wire w, 0 if none.
std::vector<GateId> closure(const Circuit& c, std::span<const QubitRef> v, std::vector<int>* frontier) {
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(c.num_levels()));
  for (int t = 1; t <= c.num_levels(); ++t) seen[static_cast<std::size_t>(t - 1)].assign(c.level(t).size(), 0);
  if (frontier) frontier->assign(static_cast<std::size_t>(c.num_qubits()), 0);

  std::vector<GateId> out;
  std::vector<QubitRef> stack(v.begin(), v.end());
  while (!stack.empty()) {
    const QubitRef q = stack.back();
    stack.pop_back();
    if (q.time == 0) continue;
    const GateId id = c.gate_at(q.time, q.wire);
    char& mark = seen[static_cast<std::size_t>(id.level - 1)][static_cast<std::size_t>(id.index)];
    if (mark) continue;
    mark = 1;
    out.push_back(id);
    for (int w : c.placement(id).wires) {
      if (frontier) (*frontier)[static_cast<std::size_t>(w)] = std::max((*frontier)[static_cast<std::size_t>(w)], id.level);
      stack.push_back(QubitRef{w, id.level - 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GateId> apply_closure(const Circuit& c, std::span<const QubitRef> v) {
  check_refs(v, c);
  return closure(c, v, nullptr);
}

bool is_consistent(std::span<const QubitRef> v, const Circuit& c) {
  check_refs(v, c);
  std::vector<int> frontier;
  closure(c, v, &frontier);
  // A member survives only if nothing in the closure advanced its wire past it.
  return std::all_of(v.begin(), v.end(),
                     [&](const QubitRef& q) { return frontier[static_cast<std::size_t>(q.wire)] == q.time; });
}

DistLatest dist_latest(std::span<const QubitRef> v) {
  DistLatest out;
  for (const QubitRef& q : v) {
    out.dist = out.dist ? std::min(*out.dist, q.time) : q.time;
    out.latest = std::max(out.latest, q.time);
  }
  return out;
}

DistLatest dist_latest(std::span<const QubitRef> v, const Circuit& c) {
  check_refs(v, c);
  return dist_latest(v);
}

ConsistentSet make_consistent_set(std::vector<QubitRef> v, const Circuit& c) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!is_consistent(v, c)) throw CircuitError("qubit set is not consistent");
  const DistLatest dl = dist_latest(v);
  return ConsistentSet{std::move(v), dl.dist, dl.latest};
}

std::vector<ConsistentSet> enumerate_consistent_sets(const Circuit& c, int max_size, std::size_t cap) {
  if (max_size < 0) throw std::invalid_argument("enumerate_consistent_sets: max_size must be non-negative");
  std::vector<QubitRef> all;
  for (int t = 0; t <= c.num_levels(); ++t)
    for (int w = 0; w < c.num_qubits(); ++w) all.push_back(QubitRef{w, t});

  std::vector<ConsistentSet> out;
  std::vector<QubitRef> current;
  std::vector<char> wire_used(static_cast<std::size_t>(c.num_qubits()), 0);

  const auto emit = [&] {
    if (out.size() >= cap) throw BudgetExceeded("consistent-set enumeration exceeded cap of " + std::to_string(cap));
    const DistLatest dl = dist_latest(current);
    out.push_back(ConsistentSet{current, dl.dist, dl.latest});
  };

  // Subsets of consistent sets are consistent, so extending only consistent
  // prefixes reaches every consistent set exactly once.
  const auto extend = [&](auto&& self, std::size_t start) -> void {
    emit();
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = start; i < all.size(); ++i) {
      const QubitRef q = all[i];
      if (wire_used[static_cast<std::size_t>(q.wire)]) continue;
      current.push_back(q);
      if (is_consistent(current, c)) {
        wire_used[static_cast<std::size_t>(q.wire)] = 1;
        self(self, i + 1);
        wire_used[static_cast<std::size_t>(q.wire)] = 0;
      }
      current.pop_back();
    }
  };
  extend(extend, 0);

  const auto key = [](const ConsistentSet& s) {
    const auto at_latest = std::count_if(s.qubits.begin(), s.qubits.end(),
                                         [&](const QubitRef& q) { return q.time == s.latest; });
    return std::make_tuple(s.latest, at_latest);
  };
  std::stable_sort(out.begin(), out.end(), [&](const ConsistentSet& a, const ConsistentSet& b) {
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return std::lexicographical_compare(a.qubits.begin(), a.qubits.end(), b.qubits.begin(), b.qubits.end());
  });
  return out;
}

}  // namespace noisebound
