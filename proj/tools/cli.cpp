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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "noisebound/bounds.hpp"
#include "noisebound/channels.hpp"
#include "noisebound/circuit.hpp"
#include "noisebound/io.hpp"
#include "noisebound/parallel.hpp"
#include "noisebound/random.hpp"
#include "noisebound/simulate.hpp"
#include "noisebound/verify.hpp"

namespace noisebound::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format = "csv";
  int jobs = 1;
  std::string circuit_path;
  std::string random_spec;
  std::optional<double> eps1;
  std::optional<double> epsk;
  std::string pair = "basis";

  int k = 2;
  bool cnot_only = false;
  std::string t_range;
  int max_set_size = 4;
  std::optional<double> theta;
  std::size_t cap = 1'000'000;
  int cases = 200;
  int trajectories = 0;
  std::string theta_mode = "auto";
};

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string g12(double x) { return fmt("%.12g", x); }

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw UsageError("bad number for " + key + ": '" + value + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int x = 0;
  try {
    x = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw UsageError("bad integer for " + key + ": '" + value + "'");
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

struct RandomSpec {
  int n = 0;
  int levels = 0;
  std::vector<std::string> pool = {"CNOT", "H", "S", "T", "RESET", "ID", "RANDMIX2"};
  NoiseModel noise;
  int k = 0;
};

RandomSpec parse_random_spec(const std::string& text) {
  RandomSpec spec;
  bool have_n = false, have_t = false;
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("random spec entry '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_int(key, value);
      have_n = true;
    } else if (key == "T") {
      spec.levels = parse_int(key, value);
      have_t = true;
    } else if (key == "pool") {
      spec.pool = split(value, ':');
    } else if (key == "eps1") {
      spec.noise.eps1 = parse_double(key, value);
    } else if (key == "epsk") {
      spec.noise.epsk = parse_double(key, value);
    } else if (key == "k") {
      spec.k = parse_int(key, value);
    } else {
      throw UsageError("unknown random spec key '" + key + "'");
    }
  }
  if (!have_n || !have_t) throw UsageError("random spec needs n= and T=");
  if (spec.pool.empty()) throw UsageError("random spec pool is empty");
  return spec;
}

int pool_arity(const std::string& name) {
  if (name.rfind("RANDU", 0) == 0 || name.rfind("RANDMIX", 0) == 0) {
    const std::size_t digits = name.find_first_of("0123456789");
    return digits == std::string::npos ? 1 : std::stoi(name.substr(digits));
  }
  if (name == "RANDRSW") return 1;
  if (const auto b = builtin_from_name(name)) return builtin_arity(*b);
  throw UsageError("unknown pool entry '" + name + "'");
}

void require_valid_gates(const Circuit& c) {
  for (int t = 1; t <= c.num_levels(); ++t) {
    for (const GatePlacement& p : c.level(t)) {
      const ValidationReport r = validate_gate(p.gate);
      if (!r.ok)
        throw UsageError("level " + std::to_string(t) + ": invalid " + p.gate.name() + " gate (" + r.invariant +
                         "): " + r.message);
    }
  }
}

/// Loads or generates the circuit. `levels` overrides T for random circuits.
Circuit load_circuit(const Options& o, std::optional<int> levels = std::nullopt, bool validate = true) {
  if (o.circuit_path.empty() == o.random_spec.empty())
    throw UsageError("exactly one of --circuit or --random is required");
  std::optional<Circuit> c;
  if (!o.circuit_path.empty()) {
    c = load_circuit_file(o.circuit_path);
  } else {
    if (!o.seed) throw UsageError("--random requires --seed");
    const RandomSpec spec = parse_random_spec(o.random_spec);
    int k = spec.k;
    if (k == 0)
      for (const std::string& name : spec.pool) k = std::max(k, pool_arity(name));
    c = random_circuit(spec.n, levels.value_or(spec.levels), *o.seed, spec.pool, k, spec.noise);
  }
  if (o.eps1 || o.epsk) {
    NoiseModel noise = c->noise();
    if (o.eps1) noise.eps1 = *o.eps1;
    if (o.epsk) noise.epsk = *o.epsk;
    c = c->with_noise(noise);
  }
  if (validate) require_valid_gates(*c);
  return *c;
}

std::uint64_t parse_bits(const std::string& bits, int n) {
  if (static_cast<int>(bits.size()) != n) throw UsageError("pair bit string '" + bits + "' must have one digit per qubit");
  std::uint64_t mask = 0;
  for (int q = 0; q < n; ++q) {
    const char ch = bits[static_cast<std::size_t>(q)];
    if (ch != '0' && ch != '1') throw UsageError("pair bit string '" + bits + "' must contain only 0 and 1");
    if (ch == '1') mask |= std::uint64_t{1} << q;
  }
  return mask;
}

InputPair make_pair(const Options& o, int n) {
  if (o.pair == "basis") return InputPair::basis(n, 0, (std::uint64_t{1} << n) - 1);
  if (o.pair == "random") {
    Rng rng(o.seed.value_or(0) ^ 0x9e3779b97f4a7c15ULL);
    CMatrix rho = random_pure_density(rng, n);
    CMatrix tau = random_pure_density(rng, n);
    return InputPair::make(std::move(rho), std::move(tau));
  }
  const std::vector<std::string> parts = split(o.pair, ',');
  if (parts.size() != 2) throw UsageError("--pair must be 'basis', 'random' or 'BITS,BITS'");
  return InputPair::basis(n, parse_bits(parts[0], n), parse_bits(parts[1], n));
}

std::pair<int, int> parse_range(const std::string& text, int fallback_hi) {
  if (text.empty()) return {1, fallback_hi};
  const std::vector<std::string> parts = split(text, ':');
  int lo = 0, hi = 0;
  if (parts.size() == 1) {
    lo = hi = parse_int("--T-range", parts[0]);
  } else if (parts.size() == 2) {
    lo = parse_int("--T-range", parts[0]);
    hi = parse_int("--T-range", parts[1]);
  } else {
    throw UsageError("--T-range must be LO:HI");
  }
  if (lo < 1 || hi < lo) throw UsageError("--T-range must be a nonempty range of positive levels");
  return {lo, hi};
}

void require_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
}

ThetaResult minimal_theta(const Options& o, const Circuit& c) {
  if (o.theta_mode == "auto") return theta_for_circuit(c);
  if (o.theta_mode == "general") return theta_for(c.noise(), c.k_max(), false);
  throw UsageError("--theta-mode must be auto or general");
}

std::string refusal(const ThetaResult& r) {
  return "refusing: noise is below the threshold, theta = " + g12(r.theta) + " >= 1; violated constraint " +
         constraint_formula(r.binding);
}

// Commands write into `body` and return an exit code.

int cmd_threshold(const Options& o, std::ostream& body) {
  if (o.k < 1) throw UsageError("--k must be at least 1");
  if (o.cnot_only && o.k != 2) throw UsageError("--cnot-only applies to k = 2");
  const double general = epsk_threshold(o.k);
  if (o.format == "json") {
    json j;
    j["k"] = o.k;
    j["epsk_threshold"] = general;
    if (o.cnot_only) j["cnot_threshold"] = cnot_threshold();
    body << j.dump(2) << "\n";
  } else {
    body << "mode,k,threshold\n";
    body << "general," << o.k << "," << fmt("%.6f", general) << "\n";
    if (o.cnot_only) body << "cnot,2," << fmt("%.6f", cnot_threshold()) << "\n";
  }
  return kExitPass;
}

int cmd_decay(const Options& o, std::ostream& body) {
  std::optional<int> t_max;
  if (!o.t_range.empty()) t_max = parse_range(o.t_range, 1).second;
  const Circuit c = load_circuit(o, t_max);
  const auto [lo, hi] = parse_range(o.t_range, c.num_levels());
  if (hi > c.num_levels())
    throw UsageError("--T-range exceeds the circuit depth of " + std::to_string(c.num_levels()));
  const ThetaResult theta = minimal_theta(o, c);
  if (!theta.feasible) throw UsageError(refusal(theta));

  const CompiledCircuit cc(c);
  const CoeffVector delta0 = coeffs_from_op(make_pair(o, c.num_qubits()).delta());
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<double> measured(count);
  parallel_for(count, o.jobs, [&](std::size_t i) {
    const int t = lo + static_cast<int>(i);
    const CoeffVector v = evolve_pauli(cc, delta0, Cut::prefix(c, t));
    measured[i] = 0.5 * std::abs(v.at(PauliString(c.num_qubits(), 0, std::uint64_t{1} << c.output_wire())));
  });

  bool pass = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "T,measured,bound\n";
  for (std::size_t i = 0; i < count; ++i) {
    const int t = lo + static_cast<int>(i);
    const double bound = decay_bound(theta.theta, t);
    pass = pass && measured[i] <= bound + kBoundTol;
    csv << t << "," << g12(measured[i]) << "," << g12(bound) << "\n";
    rows.push_back(json{{"T", t}, {"measured", measured[i]}, {"bound", bound}});
  }
  if (o.format == "json") {
    json j;
    j["theta"] = theta.theta;
    j["binding"] = constraint_tag(theta.binding);
    j["rows"] = rows;
    j["pass"] = pass;
    body << j.dump(2) << "\n";
  } else {
    body << csv.str();
  }
  return pass ? kExitPass : kExitViolation;
}

json qubits_json(const std::vector<QubitRef>& v) {
  json arr = json::array();
  for (const QubitRef& q : v) arr.push_back(json::array({q.wire, q.time}));
  return arr;
}

std::string qubits_text(const std::vector<QubitRef>& v) {
  std::string s;
  for (const QubitRef& q : v) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(q.wire) + ":" + std::to_string(q.time) + ")";
  }
  return s;
}

int cmd_check_invariant(const Options& o, std::ostream& body, std::ostream& err) {
  if (o.max_set_size < 0) throw UsageError("--max-set-size must be nonnegative");
  const Circuit c = load_circuit(o);
  const ThetaResult minimal = minimal_theta(o, c);
  const bool exploratory = o.theta.has_value();
  double theta = minimal.theta;
  if (exploratory) {
    if (!(*o.theta > 0.0)) throw UsageError("--theta must be positive");
    theta = *o.theta;
    err << "warning: exploratory mode with theta forced to " << g12(theta)
        << "; margins are reported but failures do not change the exit code\n";
  } else if (!minimal.feasible) {
    throw UsageError(refusal(minimal));
  }

  const CompiledCircuit cc(c);
  const InvariantReport report = audit_invariant(cc, make_pair(o, c.num_qubits()), theta, o.max_set_size, o.cap, o.jobs);
  const std::size_t failures = static_cast<std::size_t>(
      std::count_if(report.records.begin(), report.records.end(), [](const InvariantRecord& r) { return !r.pass; }));

  if (o.format == "csv") {
    body << "qubits,dist,lhs,rhs,margin,pass\n";
    for (const InvariantRecord& r : report.records) {
      body << qubits_text(r.qubits) << "," << (r.dist ? std::to_string(*r.dist) : "inf") << "," << g12(r.lhs) << ","
           << g12(r.rhs) << "," << g12(r.margin) << "," << (r.pass ? "pass" : "FAIL") << "\n";
    }
  } else {
    json j;
    j["mode"] = exploratory ? "exploratory" : "audit";
    j["theta"] = theta;
    j["minimal_theta"] = minimal.theta;
    j["max_set_size"] = o.max_set_size;
    j["sets"] = report.records.size();
    j["failures"] = failures;
    j["min_margin"] = report.min_margin;
    j["all_pass"] = report.all_pass;
    json records = json::array();
    for (const InvariantRecord& r : report.records) {
      json rec;
      rec["qubits"] = qubits_json(r.qubits);
      rec["dist"] = r.dist ? json(*r.dist) : json(nullptr);
      rec["lhs"] = r.lhs;
      rec["rhs"] = r.rhs;
      rec["margin"] = r.margin;
      rec["pass"] = r.pass;
      records.push_back(rec);
    }
    j["records"] = records;
    body << j.dump(2) << "\n";
  }
  if (exploratory) return kExitPass;
  return report.all_pass ? kExitPass : kExitViolation;
}

int cmd_verify(const Options& o, std::ostream& body) {
  if (o.cases < 0) throw UsageError("--cases must be nonnegative");
  std::vector<std::string> validation_failures;
  if (!o.circuit_path.empty() || !o.random_spec.empty()) {
    const Circuit c = load_circuit(o, std::nullopt, false);
    for (int t = 1; t <= c.num_levels(); ++t) {
      const Circuit::Level& level = c.level(t);
      for (std::size_t i = 0; i < level.size(); ++i) {
        const ValidationReport r = validate_gate(level[i].gate);
        if (!r.ok)
          validation_failures.push_back("level " + std::to_string(t) + " gate " + std::to_string(i) + " (" +
                                        level[i].gate.name() + "): " + r.invariant + ": " + r.message);
      }
    }
  }
  const std::vector<SuiteResult> suites = run_verification(o.seed.value_or(1), o.cases);
  bool ok = validation_failures.empty();
  for (const SuiteResult& s : suites) ok = ok && s.ok();

  if (o.format == "json") {
    json j;
    json arr = json::array();
    for (const SuiteResult& s : suites) {
      json r{{"suite", s.name}, {"passed", s.passed}, {"total", s.total}, {"ok", s.ok()}};
      if (!s.first_failure.empty()) r["first_failure"] = s.first_failure;
      arr.push_back(r);
    }
    j["suites"] = arr;
    j["validation_failures"] = validation_failures;
    j["ok"] = ok;
    body << j.dump(2) << "\n";
  } else {
    for (const std::string& f : validation_failures) body << "validation failure: " << f << "\n";
    for (const SuiteResult& s : suites) {
      body << s.name << ": " << s.passed << "/" << s.total << (s.ok() ? " ok" : " FAIL");
      if (!s.first_failure.empty()) body << " (" << s.first_failure << ")";
      body << "\n";
    }
    body << (ok ? "all suites pass\n" : "verification failed\n");
  }
  return ok ? kExitPass : kExitViolation;
}

std::string block_of(const PauliString& p) {
  const bool c = p.at(0) != Pauli::I, t = p.at(1) != Pauli::I;
  if (!c && !t) return "identity";
  if (!c) return "target-only";
  if (!t) return "control-only";
  return "both";
}

int cmd_cnot_table(const Options& o, std::ostream& body) {
  static constexpr Pauli kOrder[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const CMatrix cnot = mat::cnot();
  bool ok = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "input,output,sign,input_block,output_block,oracle\n";
  for (Pauli a : kOrder) {
    for (Pauli b : kOrder) {
      PauliString in(2);
      in.set(0, a);
      in.set(1, b);
      const SignedPauli act = cnot_pauli_action(in);
      const ConjugationResult oracle = pauli_conjugation_oracle(cnot, in);
      const bool agree = oracle.is_pauli && oracle.pauli == act.pauli && oracle.sign == act.sign;
      const std::string bin = block_of(in), bout = block_of(act.pauli);
      const bool crosses = (bin == "target-only" && bout == "control-only") ||
                           (bin == "control-only" && bout == "target-only");
      ok = ok && agree && !crosses;
      const std::string sign = act.sign > 0 ? "+1" : "-1";
      csv << in.to_string() << "," << act.pauli.to_string() << "," << sign << "," << bin << "," << bout << ","
          << (agree ? "match" : "MISMATCH") << "\n";
      rows.push_back(json{{"input", in.to_string()},
                          {"output", act.pauli.to_string()},
                          {"sign", act.sign},
                          {"input_block", bin},
                          {"output_block", bout},
                          {"oracle_match", agree}});
    }
  }
  if (o.format == "json") {
    body << json{{"rows", rows}, {"ok", ok}}.dump(2) << "\n";
  } else {
    body << csv.str();
  }
  return ok ? kExitPass : kExitViolation;
}

std::size_t pick(Rng& rng, const std::vector<double>& probs) {
  double u = rng.uniform();
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    if (u < probs[i]) return i;
    u -= probs[i];
  }
  return probs.size() - 1;
}

void sampled_depolarize(CMatrix& m, Rng& rng, int wire, double p) {
  if (rng.uniform() < p) kernels::depolarize(m, wire, 1.0);
}

/// Monte Carlo estimate: every mixture branch and every depolarizing event is
/// sampled instead of averaged. Only meant for demonstrations.
double sampled_distinguishability(const CompiledCircuit& cc, const HermitianOp& delta, int trajectories,
                                  std::uint64_t seed) {
  const Circuit& c = cc.circuit();
  Rng rng(seed);
  const PauliString z(c.num_qubits(), 0, std::uint64_t{1} << c.output_wire());
  const CMatrix zm = pauli_matrix(z);
  double sum = 0.0;
  for (int r = 0; r < trajectories; ++r) {
    CMatrix m = delta.matrix();
    for (int t = 1; t <= c.num_levels(); ++t) {
      const Circuit::Level& level = c.level(t);
      for (std::size_t i = 0; i < level.size(); ++i) {
        const GatePlacement& g = level[i];
        const LoweredGate& lowered = cc.lowered(GateId{t, static_cast<int>(i)});
        const bool multi = g.wires.size() > 1;
        if (multi)
          for (int w : g.wires) sampled_depolarize(m, rng, w, c.noise().epsk);
        if (const auto* mix = std::get_if<UnitaryMixture>(&lowered)) {
          kernels::apply_unitary(m, mix->unitaries[pick(rng, mix->probs)], g.wires);
        } else {
          const auto& one = std::get<OneQubitGate>(lowered);
          kernels::apply_rsw(m, one.terms[pick(rng, one.probs)], g.wires[0]);
        }
        if (!multi) sampled_depolarize(m, rng, g.wires[0], c.noise().eps1);
      }
    }
    sum += (zm * m).trace().real();
  }
  return 0.5 * std::abs(sum / trajectories);
}

int cmd_simulate(const Options& o, std::ostream& body) {
  if (o.trajectories < 0) throw UsageError("--trajectories must be nonnegative");
  const Circuit c = load_circuit(o);
  if (o.trajectories > 0 && c.num_qubits() > kMaxDenseQubits)
    throw UsageError("--trajectories needs at most " + std::to_string(kMaxDenseQubits) + " qubits");
  const CompiledCircuit cc(c);
  const HermitianOp delta0 = make_pair(o, c.num_qubits()).delta();
  const double delta = output_distinguishability(cc, coeffs_from_op(delta0));
  std::optional<double> sampled;
  if (o.trajectories > 0) sampled = sampled_distinguishability(cc, delta0, o.trajectories, o.seed.value_or(0));
  const ThetaResult theta = minimal_theta(o, c);
  const double bound = theta.feasible ? decay_bound(theta.theta, c.num_levels()) : 0.0;
  const bool pass = !theta.feasible || delta <= bound + kBoundTol;
  if (o.format == "json") {
    json j;
    j["qubits"] = c.num_qubits();
    j["T"] = c.num_levels();
    j["measured"] = delta;
    j["theta"] = theta.theta;
    j["feasible"] = theta.feasible;
    j["bound"] = theta.feasible ? json(bound) : json(nullptr);
    if (sampled) {
      j["trajectories"] = o.trajectories;
      j["sampled"] = *sampled;
    }
    body << j.dump(2) << "\n";
  } else {
    body << "qubits,T,measured,theta,bound" << (sampled ? ",sampled" : "") << "\n";
    body << c.num_qubits() << "," << c.num_levels() << "," << g12(delta) << "," << g12(theta.theta) << ","
         << (theta.feasible ? g12(bound) : "none");
    if (sampled) body << "," << g12(*sampled);
    body << "\n";
  }
  return pass ? kExitPass : kExitViolation;
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--circuit", o.circuit_path, "Circuit file (.json for JSON, otherwise the text format)");
  cmd->add_option("--random", o.random_spec, "Random circuit, e.g. \"n=3,T=8,pool=CNOT:H:RANDMIX2,eps1=0.1,epsk=0.4\"");
  cmd->add_option("--eps1", o.eps1, "Override the one-qubit noise strength");
  cmd->add_option("--epsk", o.epsk, "Override the multi-qubit noise strength");
  cmd->add_option("--theta-mode", o.theta_mode,
                  "auto: CNOT-only circuits use the sharper CNOT constraint; general: always the k-gate constraint");
  cmd->add_option("--pair", o.pair, "Input pair: basis (|0..0> vs |1..1>), random, or BITS,BITS with qubit 0 first");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"noisebound: noisy-circuit distinguishability bounds, audits and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for random circuits, pairs and verification");
  app.add_option("--out", o.out_path, "Write results to this file instead of stdout");
  app.add_option("--format", o.format, "Output format: csv or json");
  app.add_option("--jobs", o.jobs, "Worker threads; output is identical for any value")->check(CLI::PositiveNumber);

  CLI::App* threshold = app.add_subcommand("threshold", "Print the multi-qubit noise threshold");
  threshold->add_option("--k", o.k, "Gate arity");
  threshold->add_flag("--cnot-only", o.cnot_only, "Also print the threshold for CNOT-only circuits");

  CLI::App* decay = app.add_subcommand(
      "decay",
      "Measured output distinguishability against the decay bound. Every T in the range uses the first T levels "
      "of one circuit of depth max(T), so rows are comparable.");
  add_source_options(decay, o);
  decay->add_option("--T-range", o.t_range, "Level range LO:HI (default 1:depth)");

  CLI::App* check = app.add_subcommand("check-invariant", "Audit the invariant over all consistent sets");
  add_source_options(check, o);
  check->add_option("--max-set-size", o.max_set_size, "Largest consistent set to enumerate");
  check->add_option("--theta", o.theta, "Force theta (exploratory mode: report only, exit 0)");
  check->add_option("--cap", o.cap, "Maximum number of enumerated sets");

  CLI::App* verify = app.add_subcommand("verify", "Run the randomized cross-check suites");
  add_source_options(verify, o);
  verify->add_option("--cases", o.cases, "Cases per suite");

  app.add_subcommand("cnot-table", "Print the CNOT action on two-qubit Pauli strings");

  CLI::App* simulate = app.add_subcommand("simulate", "Output distinguishability of one circuit");
  add_source_options(simulate, o);
  simulate->add_option("--trajectories", o.trajectories,
                       "Also print a Monte Carlo estimate from this many sampled noise trajectories");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream body;
  int code = kExitPass;
  try {
    require_format(o);
    if (*threshold) {
      code = cmd_threshold(o, body);
    } else if (*decay) {
      code = cmd_decay(o, body);
    } else if (*check) {
      code = cmd_check_invariant(o, body, err);
    } else if (*verify) {
      code = cmd_verify(o, body);
    } else if (*simulate) {
      code = cmd_simulate(o, body);
    } else {
      code = cmd_cnot_table(o, body);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const noisebound::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitUsage;
    }
    file << body.str();
  }
  return code;
}

}  // namespace noisebound::cli
