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

#include "noisebound/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace noisebound {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------------------
// DSL reader

class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, col(), message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, static_cast<int>(pos) + 1, message);
  }

  int col() const { return static_cast<int>(pos_) + 1; }
  std::size_t pos() const { return pos_; }
  int line() const { return line_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(std::string_view word) {
    const std::size_t at = (skip_ws(), pos_);
    if (ident() != word) fail_at(at, "expected '" + std::string(word) + "'");
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "+" || digits == "-") fail_at(start, "expected an integer");
    return std::strtol(digits.c_str(), nullptr, 10);
  }

  double number() {
    skip_ws();
    const std::optional<double> v = raw_number();
    if (!v) fail("expected a number");
    return *v;
  }

  cplx complex_literal() {
    skip_ws();
    const std::size_t start = pos_;
    const std::optional<double> first = raw_number();
    if (!first) fail("expected a complex number");
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return {0.0, *first};
    }
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const std::optional<double> second = raw_number();
      if (!second || pos_ >= text_.size() || text_[pos_] != 'i')
        fail_at(start, "malformed complex number; expected re+imi");
      ++pos_;
      return {*first, *second};
    }
    return {*first, 0.0};
  }

 private:
  // Reads a finite decimal float starting exactly at pos_.
  std::optional<double> raw_number() {
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
    bool digits = false;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end, digits = true;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end, digits = true;
    }
    if (!digits) return std::nullopt;
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) ++exp;
      if (exp < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp]))) {
        while (exp < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp]))) ++exp;
        end = exp;
      }
    }
    const std::string token(text_.substr(pos_, end - pos_));
    pos_ = end;
    return std::strtod(token.c_str(), nullptr);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

struct ParamValue {
  std::size_t pos = 0;
  bool is_list = false;
  double scalar = 0.0;
  std::vector<cplx> list;
};

CMatrix square_matrix(const Cursor& cur, const ParamValue& v, int arity, const std::string& what) {
  const std::size_t dim = std::size_t{1} << arity;
  if (!v.is_list) cur.fail_at(v.pos, what + " must be a list");
  if (v.list.size() != dim * dim)
    cur.fail_at(v.pos, "arity mismatch: " + what + " needs " + std::to_string(dim * dim) + " entries for " +
                           std::to_string(arity) + " wire(s), got " + std::to_string(v.list.size()));
  CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.list[r * dim + c];
  return m;
}

double scalar_param(const Cursor& cur, const ParamValue& v, const std::string& what) {
  if (v.is_list) cur.fail_at(v.pos, what + " must be a number");
  return v.scalar;
}

std::vector<double> real_list(const Cursor& cur, const ParamValue& v, const std::string& what) {
  if (!v.is_list) cur.fail_at(v.pos, what + " must be a list");
  std::vector<double> out;
  for (const cplx& z : v.list) {
    if (z.imag() != 0.0) cur.fail_at(v.pos, what + " entries must be real");
    out.push_back(z.real());
  }
  return out;
}

GatePlacement parse_placement(Cursor& cur) {
  const std::size_t name_pos = (cur.skip_ws(), cur.pos());
  const std::string name = cur.ident();
  cur.expect('(');
  GatePlacement g;
  do {
    const long w = cur.integer();
    g.wires.push_back(static_cast<int>(w));
  } while (cur.accept(','));

  std::map<std::string, ParamValue> params;
  if (cur.accept(';')) {
    do {
      const std::size_t key_pos = (cur.skip_ws(), cur.pos());
      const std::string key = cur.ident();
      cur.expect('=');
      ParamValue v;
      v.pos = (cur.skip_ws(), cur.pos());
      if (cur.accept('[')) {
        v.is_list = true;
        if (!cur.accept(']')) {
          do v.list.push_back(cur.complex_literal());
          while (cur.accept(','));
          cur.expect(']');
        }
      } else {
        v.scalar = cur.number();
      }
      if (!params.emplace(key, std::move(v)).second) cur.fail_at(key_pos, "duplicate parameter '" + key + "'");
    } while (cur.accept(';') || cur.accept(','));
  }
  cur.expect(')');

  const int arity = static_cast<int>(g.wires.size());
  std::set<std::string> used;
  const auto take = [&](const std::string& key) -> const ParamValue& {
    auto it = params.find(key);
    if (it == params.end()) cur.fail_at(name_pos, name + ": missing parameter '" + key + "'");
    used.insert(key);
    return it->second;
  };
  const auto require_arity = [&](int expected) {
    if (arity != expected)
      cur.fail_at(name_pos, "arity mismatch: " + name + " takes " + std::to_string(expected) + " wire(s), got " +
                                std::to_string(arity));
  };

  if (auto b = builtin_from_name(name)) {
    require_arity(builtin_arity(*b));
    g.gate = GateSpec(*b);
  } else if (name == "DEPOL") {
    require_arity(1);
    g.gate = GateSpec(DepolGate{scalar_param(cur, take("p"), "p")});
  } else if (name == "U") {
    g.gate = GateSpec(UnitaryGate{square_matrix(cur, take("m"), arity, "m")});
  } else if (name == "MIX") {
    MixtureGate mix;
    mix.probs = real_list(cur, take("p"), "p");
    for (std::size_t i = 1; i <= mix.probs.size(); ++i) {
      const std::string key = "m" + std::to_string(i);
      mix.unitaries.push_back(square_matrix(cur, take(key), arity, key));
    }
    if (mix.probs.empty()) cur.fail_at(name_pos, "MIX needs at least one term");
    g.gate = GateSpec(std::move(mix));
  } else if (name == "RSW") {
    require_arity(1);
    RswChannel ch;
    ch.lambda1 = scalar_param(cur, take("l1"), "l1");
    ch.lambda2 = scalar_param(cur, take("l2"), "l2");
    const ParamValue& sign = take("sign");
    const double s = scalar_param(cur, sign, "sign");
    if (s != 1.0 && s != -1.0) cur.fail_at(sign.pos, "sign must be +1 or -1");
    ch.t_sign = static_cast<int>(s);
    if (params.count("u1")) ch.post = square_matrix(cur, take("u1"), 1, "u1");
    if (params.count("u2")) ch.pre = square_matrix(cur, take("u2"), 1, "u2");
    g.gate = GateSpec(RswGate{ch});
  } else {
    cur.fail_at(name_pos, "unknown gate name '" + name + "'");
  }
  for (const auto& [key, value] : params)
    if (!used.count(key)) cur.fail_at(value.pos, name + ": unexpected parameter '" + key + "'");
  return g;
}

struct SourceLine {
  int number;
  std::string text;
};

std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DSL writer

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(cplx z) {
  std::string out = fmt_double(z.real());
  if (z.imag() == 0.0 && !std::signbit(z.imag())) return out;
  out += std::signbit(z.imag()) ? "-" : "+";
  out += fmt_double(std::abs(z.imag()));
  out += "i";
  return out;
}

std::string fmt_matrix(const CMatrix& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r || c) out += ",";
      out += fmt_complex(m(r, c));
    }
  return out + "]";
}

std::string fmt_placement(const GatePlacement& g) {
  std::string out = g.gate.name() + "(";
  for (std::size_t i = 0; i < g.wires.size(); ++i) out += (i ? "," : "") + std::to_string(g.wires[i]);
  std::visit(
      [&](const auto& gate) {
        using G = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<G, DepolGate>) {
          out += "; p=" + fmt_double(gate.p);
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          out += "; m=" + fmt_matrix(gate.matrix);
        } else if constexpr (std::is_same_v<G, MixtureGate>) {
          out += "; p=[";
          for (std::size_t i = 0; i < gate.probs.size(); ++i) out += (i ? "," : "") + fmt_double(gate.probs[i]);
          out += "]";
          for (std::size_t i = 0; i < gate.unitaries.size(); ++i)
            out += "; m" + std::to_string(i + 1) + "=" + fmt_matrix(gate.unitaries[i]);
        } else if constexpr (std::is_same_v<G, RswGate>) {
          const RswChannel& ch = gate.channel;
          out += "; l1=" + fmt_double(ch.lambda1) + ", l2=" + fmt_double(ch.lambda2) +
                 ", sign=" + (ch.t_sign < 0 ? "-1" : "1");
          if (ch.post.rows() != 2 || ch.post != CMatrix::Identity(2, 2)) out += ", u1=" + fmt_matrix(ch.post);
          if (ch.pre.rows() != 2 || ch.pre != CMatrix::Identity(2, 2)) out += ", u2=" + fmt_matrix(ch.pre);
        }
      },
      g.gate.variant());
  return out + ")";
}

// ---------------------------------------------------------------------------
// JSON

using ojson = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& message) { throw ParseError(0, 0, "schema: " + message); }

ojson matrix_to_json(const CMatrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(ojson::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

double json_number(const ojson& j, const std::string& what) {
  if (!j.is_number()) schema_fail(what + " must be a number");
  return j.get<double>();
}

int json_int(const ojson& j, const std::string& what) {
  if (!j.is_number_integer()) schema_fail(what + " must be an integer");
  return j.get<int>();
}

const ojson& json_field(const ojson& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(where + ": missing \"" + key + "\"");
  return *it;
}

void json_only_keys(const ojson& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) schema_fail(where + ": unexpected key \"" + it.key() + "\"");
  }
}

CMatrix matrix_from_json(const ojson& j, const std::string& what) {
  if (!j.is_array() || j.empty()) schema_fail(what + " must be a non-empty array of rows");
  const std::size_t dim = j.size();
  CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) schema_fail(what + " must be square");
    for (std::size_t c = 0; c < dim; ++c) {
      const ojson& z = j[r][c];
      if (!z.is_array() || z.size() != 2) schema_fail(what + " entries must be [re, im] pairs");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cplx(json_number(z[0], what), json_number(z[1], what));
    }
  }
  return m;
}

ojson placement_to_json(const GatePlacement& g) {
  ojson out;
  out["gate"] = g.gate.name();
  out["wires"] = g.wires;
  std::visit(
      [&](const auto& gate) {
        using G = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<G, DepolGate>) {
          out["p"] = gate.p;
        } else if constexpr (std::is_same_v<G, UnitaryGate>) {
          out["matrix"] = matrix_to_json(gate.matrix);
        } else if constexpr (std::is_same_v<G, MixtureGate>) {
          out["probs"] = gate.probs;
          ojson ms = ojson::array();
          for (const CMatrix& u : gate.unitaries) ms.push_back(matrix_to_json(u));
          out["matrices"] = std::move(ms);
        } else if constexpr (std::is_same_v<G, RswGate>) {
          out["l1"] = gate.channel.lambda1;
          out["l2"] = gate.channel.lambda2;
          out["sign"] = gate.channel.t_sign;
          out["u1"] = matrix_to_json(gate.channel.post);
          out["u2"] = matrix_to_json(gate.channel.pre);
        }
      },
      g.gate.variant());
  return out;
}

GatePlacement placement_from_json(const ojson& j, const std::string& where) {
  if (!j.is_object()) schema_fail(where + " must be an object");
  const ojson& name_j = json_field(j, "gate", where);
  if (!name_j.is_string()) schema_fail(where + ": \"gate\" must be a string");
  const std::string name = name_j.get<std::string>();
  const ojson& wires_j = json_field(j, "wires", where);
  if (!wires_j.is_array() || wires_j.empty()) schema_fail(where + ": \"wires\" must be a non-empty array");
  GatePlacement g;
  for (const ojson& w : wires_j) g.wires.push_back(json_int(w, where + " wire"));

  if (auto b = builtin_from_name(name)) {
    json_only_keys(j, {"gate", "wires"}, where);
    g.gate = GateSpec(*b);
  } else if (name == "DEPOL") {
    json_only_keys(j, {"gate", "wires", "p"}, where);
    g.gate = GateSpec(DepolGate{json_number(json_field(j, "p", where), where + " p")});
  } else if (name == "U") {
    json_only_keys(j, {"gate", "wires", "matrix"}, where);
    g.gate = GateSpec(UnitaryGate{matrix_from_json(json_field(j, "matrix", where), where + " matrix")});
  } else if (name == "MIX") {
    json_only_keys(j, {"gate", "wires", "probs", "matrices"}, where);
    MixtureGate mix;
    const ojson& probs = json_field(j, "probs", where);
    const ojson& ms = json_field(j, "matrices", where);
    if (!probs.is_array() || !ms.is_array() || probs.size() != ms.size() || probs.empty())
      schema_fail(where + ": \"probs\" and \"matrices\" must be equal-length non-empty arrays");
    for (const ojson& p : probs) mix.probs.push_back(json_number(p, where + " probs"));
    for (const ojson& m : ms) mix.unitaries.push_back(matrix_from_json(m, where + " matrices"));
    g.gate = GateSpec(std::move(mix));
  } else if (name == "RSW") {
    json_only_keys(j, {"gate", "wires", "l1", "l2", "sign", "u1", "u2"}, where);
    RswChannel ch;
    ch.lambda1 = json_number(json_field(j, "l1", where), where + " l1");
    ch.lambda2 = json_number(json_field(j, "l2", where), where + " l2");
    ch.t_sign = json_int(json_field(j, "sign", where), where + " sign");
    if (j.contains("u1")) ch.post = matrix_from_json(j["u1"], where + " u1");
    if (j.contains("u2")) ch.pre = matrix_from_json(j["u2"], where + " u2");
    g.gate = GateSpec(RswGate{ch});
  } else {
    schema_fail(where + ": unknown gate name '" + name + "'");
  }
  const int arity = g.gate.arity();
  if (arity != static_cast<int>(g.wires.size()))
    schema_fail(where + ": arity mismatch for " + name + ": expects " + std::to_string(arity) + " wire(s), got " +
                std::to_string(g.wires.size()));
  return g;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  const std::vector<SourceLine> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty circuit text; expected 'qubits <n> levels <T> output <wire>'");

  Cursor head(lines[0].text, lines[0].number);
  head.keyword("qubits");
  const long n = head.integer();
  head.keyword("levels");
  const std::size_t levels_pos = (head.skip_ws(), head.pos());
  const long t_count = head.integer();
  head.keyword("output");
  const long output = head.integer();
  long k_max = 0;
  if (!head.at_end()) {
    head.keyword("k");
    k_max = head.integer();
    if (k_max < 1) head.fail("k must be at least 1");
  }
  if (!head.at_end()) head.fail("unexpected trailing text");
  if (n < 1 || n > kMaxPauliQubits) head.fail_at(0, "qubit count must lie in 1.." + std::to_string(kMaxPauliQubits));
  if (t_count < 0) head.fail_at(levels_pos, "level count must be non-negative");
  if (output < 0 || output >= n) head.fail("output wire out of range");

  if (lines.size() < 2) throw ParseError(lines[0].number + 1, 1, "missing 'noise eps1=<float> epsk=<float>' line");
  Cursor noise_cur(lines[1].text, lines[1].number);
  noise_cur.keyword("noise");
  NoiseModel noise;
  bool have_eps1 = false, have_epsk = false;
  while (!noise_cur.at_end()) {
    const std::size_t at = (noise_cur.skip_ws(), noise_cur.pos());
    const std::string key = noise_cur.ident();
    noise_cur.expect('=');
    const double value = noise_cur.number();
    if (key == "eps1" && !have_eps1) {
      noise.eps1 = value;
      have_eps1 = true;
    } else if (key == "epsk" && !have_epsk) {
      noise.epsk = value;
      have_epsk = true;
    } else {
      noise_cur.fail_at(at, "unexpected noise parameter '" + key + "'");
    }
  }
  if (!have_eps1 || !have_epsk) noise_cur.fail_at(0, "noise line needs eps1=<float> and epsk=<float>");
  try {
    validate_noise(noise);
  } catch (const CircuitError& e) {
    noise_cur.fail_at(0, e.what());
  }

  std::vector<Circuit::Level> levels;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const int expected = static_cast<int>(levels.size()) + 1;
    Cursor cur(lines[li].text, lines[li].number);
    if (expected > t_count) cur.fail_at(0, "more level lines than declared (" + std::to_string(t_count) + ")");
    cur.keyword("level");
    const std::size_t idx_pos = (cur.skip_ws(), cur.pos());
    if (cur.integer() != expected)
      cur.fail_at(idx_pos, "expected level " + std::to_string(expected) + "; levels must be numbered 1..T in order");
    cur.expect(':');

    Circuit::Level level;
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    do {
      const std::size_t at = (cur.skip_ws(), cur.pos());
      GatePlacement g = parse_placement(cur);
      for (int w : g.wires) {
        if (w < 0 || w >= n) cur.fail_at(at, "wire " + std::to_string(w) + " out of range");
        if (owner[static_cast<std::size_t>(w)] != -1)
          cur.fail_at(at, "wire " + std::to_string(w) + " used twice; level is not a partition");
        owner[static_cast<std::size_t>(w)] = static_cast<int>(level.size());
      }
      level.push_back(std::move(g));
    } while (cur.accept(';'));
    if (!cur.at_end()) cur.fail("unexpected trailing text");
    for (long w = 0; w < n; ++w)
      if (owner[static_cast<std::size_t>(w)] == -1)
        cur.fail_at(0, "wire " + std::to_string(w) + " not covered; level is not a partition");
    levels.push_back(std::move(level));
  }
  if (static_cast<long>(levels.size()) != t_count) {
    const int line = lines.back().number + 1;
    throw ParseError(line, 1, "expected " + std::to_string(t_count) + " level line(s), found " +
                                  std::to_string(levels.size()));
  }
  try {
    return Circuit(static_cast<int>(n), std::move(levels), noise, static_cast<int>(output), static_cast<int>(k_max));
  } catch (const CircuitError& e) {
    throw ParseError(lines[0].number, 1, e.what());
  }
}

std::string circuit_to_dsl(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.num_qubits() << " levels " << c.num_levels() << " output " << c.output_wire() << " k "
      << c.k_max() << "\n";
  out << "noise eps1=" << fmt_double(c.noise().eps1) << " epsk=" << fmt_double(c.noise().epsk) << "\n";
  for (int t = 1; t <= c.num_levels(); ++t) {
    out << "level " << t << ":";
    const Circuit::Level& level = c.level(t);
    for (std::size_t i = 0; i < level.size(); ++i) out << (i ? "; " : " ") << fmt_placement(level[i]);
    out << "\n";
  }
  return out.str();
}

std::string circuit_to_json(const Circuit& c) {
  ojson j;
  j["qubits"] = c.num_qubits();
  j["output"] = c.output_wire();
  j["k"] = c.k_max();
  j["noise"] = ojson{{"eps1", c.noise().eps1}, {"epsk", c.noise().epsk}};
  ojson levels = ojson::array();
  for (const Circuit::Level& level : c.levels()) {
    ojson lj = ojson::array();
    for (const GatePlacement& g : level) lj.push_back(placement_to_json(g));
    levels.push_back(std::move(lj));
  }
  j["levels"] = std::move(levels);
  return j.dump(2) + "\n";
}

Circuit circuit_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_fail("top level must be an object");
  json_only_keys(j, {"qubits", "output", "k", "noise", "levels"}, "circuit");
  const int n = json_int(json_field(j, "qubits", "circuit"), "qubits");
  const int output = json_int(json_field(j, "output", "circuit"), "output");
  const int k = j.contains("k") ? json_int(j["k"], "k") : 0;
  const ojson& noise_j = json_field(j, "noise", "circuit");
  if (!noise_j.is_object()) schema_fail("\"noise\" must be an object");
  json_only_keys(noise_j, {"eps1", "epsk"}, "noise");
  const NoiseModel noise{json_number(json_field(noise_j, "eps1", "noise"), "eps1"),
                         json_number(json_field(noise_j, "epsk", "noise"), "epsk")};
  const ojson& levels_j = json_field(j, "levels", "circuit");
  if (!levels_j.is_array()) schema_fail("\"levels\" must be an array");
  std::vector<Circuit::Level> levels;
  for (std::size_t t = 0; t < levels_j.size(); ++t) {
    const std::string where = "level " + std::to_string(t + 1);
    if (!levels_j[t].is_array()) schema_fail(where + " must be an array");
    Circuit::Level level;
    for (std::size_t i = 0; i < levels_j[t].size(); ++i)
      level.push_back(placement_from_json(levels_j[t][i], where + " gate " + std::to_string(i)));
    levels.push_back(std::move(level));
  }
  try {
    return Circuit(n, std::move(levels), noise, output, k);
  } catch (const CircuitError& e) {
    schema_fail(e.what());
  }
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open circuit file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return circuit_from_json(buf.str());
  return parse_circuit(buf.str());
}

}  // namespace noisebound
