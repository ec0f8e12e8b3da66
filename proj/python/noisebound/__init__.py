# Copyright 2026 The noisebound Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Distinguishability bounds for noisy leveled circuits."""

from ._core import (
    BudgetExceeded,
    Circuit,
    CircuitError,
    GateError,
    NoiseModel,
    ParseError,
    audit_invariant,
    circuit_from_json,
    cnot_action,
    cnot_threshold,
    consistent_sets,
    decay_bound,
    epsk_threshold,
    evolve_density,
    is_consistent,
    load_circuit,
    operator_from_coefficients,
    output_distinguishability,
    parse_circuit,
    pauli_coefficients,
    random_circuit,
    theta_for,
    theta_for_circuit,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "Circuit",
    "CircuitError",
    "GateError",
    "NoiseModel",
    "ParseError",
    "audit_invariant",
    "circuit_from_json",
    "cnot_action",
    "cnot_threshold",
    "consistent_sets",
    "decay_bound",
    "epsk_threshold",
    "evolve_density",
    "is_consistent",
    "load_circuit",
    "operator_from_coefficients",
    "output_distinguishability",
    "parse_circuit",
    "pauli_coefficients",
    "random_circuit",
    "theta_for",
    "theta_for_circuit",
    "verify",
]
