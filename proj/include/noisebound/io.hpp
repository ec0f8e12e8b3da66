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

#include <stdexcept>
#include <string>
#include <string_view>

#include "noisebound/circuit.hpp"

namespace noisebound {

/// Malformed circuit text. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Line-oriented circuit text:
///
///   qubits <n> levels <T> output <wire> [k <kmax>]
///   noise eps1=<float> epsk=<float>
///   level 1: CNOT(0,1); H(2)
///   ...
///
/// Placements: builtins NAME(w,...), DEPOL(w; p=..), U(w..; m=[..]),
/// MIX(w..; p=[..]; m1=[..]; m2=[..]), RSW(w; l1=.., l2=.., sign=+-1) with
/// optional u1=[..] (applied last) and u2=[..] (applied first). Matrices are
/// row-major lists of complex literals like 0.5, -1e-3+2i or 0.7i. '#' starts a
/// comment.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit; floats are written with 17 significant digits.
std::string circuit_to_dsl(const Circuit& c);

/// Canonical JSON with a fixed key order, so equal circuits give equal bytes.
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(std::string_view text);

/// Reads a circuit file; ".json" files are JSON, anything else is the DSL.
Circuit load_circuit_file(const std::string& path);

}  // namespace noisebound
