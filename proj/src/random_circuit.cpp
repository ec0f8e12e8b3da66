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
#include <charconv>
#include <numeric>

#include "noisebound/circuit.hpp"
#include "noisebound/random.hpp"

namespace noisebound {

namespace {

struct PoolEntry {
  enum class Kind { Builtin, RandU, RandMix, RandRsw } kind;
  Builtin builtin = Builtin::ID;
  int arity = 1;
};

PoolEntry parse_pool_entry(const std::string& name) {
  if (auto b = builtin_from_name(name)) return {PoolEntry::Kind::Builtin, *b, builtin_arity(*b)};
  if (name == "RANDRSW") return {PoolEntry::Kind::RandRsw, Builtin::ID, 1};
  const auto suffix_arity = [&](std::string_view prefix) -> int {
    const std::string_view rest = std::string_view(name).substr(prefix.size());
    int k = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || rest.empty() || k < 1 || k > 4)
      throw CircuitError("bad gate pool entry '" + name + "'");
    return k;
  };
  if (name.starts_with("RANDU")) return {PoolEntry::Kind::RandU, Builtin::ID, suffix_arity("RANDU")};
  if (name.starts_with("RANDMIX")) return {PoolEntry::Kind::RandMix, Builtin::ID, suffix_arity("RANDMIX")};
  throw CircuitError("unknown gate pool entry '" + name + "'");
}

GateSpec sample_gate(const PoolEntry& e, Rng& rng) {
  switch (e.kind) {
    case PoolEntry::Kind::Builtin: return GateSpec(e.builtin);
    case PoolEntry::Kind::RandU: return GateSpec(UnitaryGate{haar_unitary(rng, e.arity)});
    case PoolEntry::Kind::RandMix: {
      const int terms = 2 + static_cast<int>(rng.below(2));
      MixtureGate g;
      for (int i = 0; i < terms; ++i) {
        g.probs.push_back(rng.uniform(0.05, 1.0));
        g.unitaries.push_back(haar_unitary(rng, e.arity));
      }
      const double total = std::accumulate(g.probs.begin(), g.probs.end(), 0.0);
      for (double& p : g.probs) p /= total;
      return GateSpec(std::move(g));
    }
    case PoolEntry::Kind::RandRsw: {
      RswChannel ch;
      ch.lambda1 = rng.uniform(-1.0, 1.0);
      ch.lambda2 = rng.uniform(-1.0, 1.0);
      ch.t_sign = rng.below(2) == 0 ? 1 : -1;
      ch.pre = haar_unitary(rng, 1);
      ch.post = haar_unitary(rng, 1);
      return GateSpec(RswGate{ch});
    }
  }
  return GateSpec();
}

}  // namespace

Circuit random_circuit(int n, int levels, std::uint64_t seed, std::span<const std::string> pool, int k,
                       NoiseModel noise) {
  if (pool.empty()) throw CircuitError("gate pool is empty");
  if (n < 1) throw CircuitError("random circuit needs at least one qubit");
  if (levels < 0) throw CircuitError("level count must be non-negative");
  std::vector<PoolEntry> entries;
  for (const std::string& name : pool) {
    entries.push_back(parse_pool_entry(name));
    if (entries.back().arity > k)
      throw CircuitError("pool entry '" + name + "' has arity above k=" + std::to_string(k));
  }

  Rng rng(seed);
  std::vector<Circuit::Level> out;
  std::vector<int> wires(static_cast<std::size_t>(n));
  for (int t = 0; t < levels; ++t) {
    std::iota(wires.begin(), wires.end(), 0);
    for (std::size_t i = wires.size(); i > 1; --i) std::swap(wires[i - 1], wires[rng.below(i)]);
    Circuit::Level level;
    std::size_t next = 0;
    while (next < wires.size()) {
      const int remaining = static_cast<int>(wires.size() - next);
      std::vector<const PoolEntry*> fitting;
      for (const PoolEntry& e : entries)
        if (e.arity <= remaining) fitting.push_back(&e);
      if (fitting.empty())
        throw CircuitError("infeasible partition: no pool gate fits the remaining " + std::to_string(remaining) +
                           " wire(s)");
      const PoolEntry& e = *fitting[rng.below(fitting.size())];
      GatePlacement g;
      g.wires.assign(wires.begin() + static_cast<std::ptrdiff_t>(next),
                     wires.begin() + static_cast<std::ptrdiff_t>(next) + e.arity);
      g.gate = sample_gate(e, rng);
      next += static_cast<std::size_t>(e.arity);
      level.push_back(std::move(g));
    }
    out.push_back(std::move(level));
  }
  return Circuit(n, std::move(out), noise, 0, k);
}

}  // namespace noisebound
