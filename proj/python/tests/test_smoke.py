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
import json

import numpy as np
import pytest

import noisebound as nb


def test_thresholds():
    assert nb.epsk_threshold(1) == 0.0
    assert abs(nb.epsk_threshold(2) - 0.356406) < 1e-6
    assert abs(nb.cnot_threshold() - 0.292893) < 1e-6


def test_theta():
    r = nb.theta_for(nb.NoiseModel(0.1, 0.4), 2)
    assert r["feasible"] and abs(r["theta"] - 0.9248) < 1e-12
    assert r["binding"] == "k-gate"
    r = nb.theta_for(nb.NoiseModel(0.1, 0.3), 2)
    assert not r["feasible"]
    assert abs(nb.decay_bound(0.81, 2) - 0.81) < 1e-15


def test_coefficients_round_trip():
    z = np.diag([1.0, -1.0]).astype(complex)
    v = nb.pauli_coefficients(z)
    assert np.allclose(v, [0, 0, 2, 0])
    assert np.allclose(nb.operator_from_coefficients(v), z)


def test_identity_chain():
    text = "qubits 1 levels 10 output 0\nnoise eps1=0.01 epsk=0.4\n" + "".join(
        f"level {t}: ID(0)\n" for t in range(1, 11)
    )
    c = nb.parse_circuit(text)
    assert c.num_levels == 10
    assert abs(nb.output_distinguishability(c) - 0.99**10) < 1e-12
    assert nb.output_distinguishability(c, 0, 0) == 0.0


def test_random_circuit_json_round_trip():
    c = nb.random_circuit(3, 4, seed=7)
    data = json.loads(c.to_json())
    assert data["qubits"] == 3 and len(data["levels"]) == 4
    assert nb.circuit_from_json(c.to_json()) == c
    assert nb.parse_circuit(c.to_text()) == c


def test_density_and_born_rule():
    c = nb.random_circuit(2, 3, seed=3, noise=nb.NoiseModel(0.1, 0.5))
    rho = np.zeros((4, 4), complex)
    rho[0, 0] = 1
    tau = np.zeros((4, 4), complex)
    tau[3, 3] = 1
    out_r, out_t = nb.evolve_density(c, rho), nb.evolve_density(c, tau)
    assert abs(np.trace(out_r) - 1) < 1e-10
    proj = np.kron(np.diag([0.0, 1.0]), np.eye(2)) if c.output_wire == 0 else np.kron(np.eye(2), np.diag([0.0, 1.0]))
    born = abs(np.trace(proj @ out_r).real - np.trace(proj @ out_t).real)
    assert abs(nb.output_distinguishability(c, rho, tau) - born) < 1e-10


def test_audit_and_consistency():
    c = nb.random_circuit(2, 3, seed=5, pool=["CNOT", "H"], noise=nb.NoiseModel(0.1, 0.32))
    report = nb.audit_invariant(c, max_set_size=3)
    assert report["all_pass"]
    assert report["records"][0]["qubits"] == [] and report["records"][0]["dist"] is None
    assert nb.is_consistent([(0, 0), (1, 0)], c)
    assert len(nb.consistent_sets(c, 0)) == 1


def test_cnot_and_verify():
    assert nb.cnot_action("XI") == ("XX", 1)
    assert nb.cnot_action("YY") == ("XZ", -1)
    suites = nb.verify(seed=2, cases=5)
    assert all(s["passed"] == s["total"] for s in suites)


def test_errors():
    with pytest.raises(nb.ParseError):
        nb.parse_circuit("qubits 2 levels 1 output 0\nnoise eps1=0.1 epsk=0.4\nlevel 1: H(0)\n")
    with pytest.raises(ValueError):
        nb.parse_circuit("qubits 1 levels 0 output 0\nnoise eps1=0 epsk=0.4\n")
