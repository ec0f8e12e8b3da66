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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "noisebound/bounds.hpp"
#include "noisebound/channels.hpp"
#include "noisebound/circuit.hpp"
#include "noisebound/io.hpp"
#include "noisebound/pauli.hpp"
#include "noisebound/simulate.hpp"
#include "noisebound/verify.hpp"

namespace py = pybind11;
using namespace noisebound;

namespace {

InputPair pair_from(const Circuit& c, const py::object& rho, const py::object& tau) {
  if (rho.is_none() && tau.is_none()) return InputPair::basis(c.num_qubits(), 0, (std::uint64_t{1} << c.num_qubits()) - 1);
  if (py::isinstance<py::int_>(rho) && py::isinstance<py::int_>(tau))
    return InputPair::basis(c.num_qubits(), rho.cast<std::uint64_t>(), tau.cast<std::uint64_t>());
  return InputPair::make(rho.cast<CMatrix>(), tau.cast<CMatrix>());
}

py::dict theta_dict(const ThetaResult& r) {
  py::dict d;
  d["theta"] = r.theta;
  d["feasible"] = r.feasible;
  d["binding"] = constraint_tag(r.binding);
  d["constraint"] = constraint_formula(r.binding);
  d["multi_qubit_term"] = r.multi_qubit_term ? py::cast(*r.multi_qubit_term) : py::none();
  d["one_qubit_term"] = r.one_qubit_term;
  return d;
}

py::list refs_list(const std::vector<QubitRef>& v) {
  py::list out;
  for (const QubitRef& q : v) out.append(py::make_tuple(q.wire, q.time));
  return out;
}

std::vector<QubitRef> refs_from(const std::vector<std::pair<int, int>>& v) {
  std::vector<QubitRef> out;
  for (const auto& [w, t] : v) out.push_back({w, t});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noisy-circuit distinguishability: thresholds, dual simulation engines and invariant audits.";

  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init<double, double>(), py::arg("eps1") = 0.1, py::arg("epsk") = 0.4)
      .def_readwrite("eps1", &NoiseModel::eps1)
      .def_readwrite("epsk", &NoiseModel::epsk)
      .def("__repr__", [](const NoiseModel& n) {
        return "NoiseModel(eps1=" + std::to_string(n.eps1) + ", epsk=" + std::to_string(n.epsk) + ")";
      });

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def_property_readonly("num_levels", &Circuit::num_levels)
      .def_property_readonly("k_max", &Circuit::k_max)
      .def_property_readonly("output_wire", &Circuit::output_wire)
      .def_property_readonly("noise", &Circuit::noise)
      .def("prefix", &Circuit::prefix, py::arg("levels"))
      .def("with_noise", &Circuit::with_noise, py::arg("noise"))
      .def("to_json", [](const Circuit& c) { return circuit_to_json(c); })
      .def("to_text", [](const Circuit& c) { return circuit_to_dsl(c); })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

  m.def("parse_circuit", [](const std::string& text) { return parse_circuit(text); }, py::arg("text"));
  m.def("circuit_from_json", [](const std::string& text) { return circuit_from_json(text); }, py::arg("text"));
  m.def("load_circuit", &load_circuit_file, py::arg("path"));
  m.def(
      "random_circuit",
      [](int n, int levels, std::uint64_t seed, const std::vector<std::string>& pool, int k, NoiseModel noise) {
        return random_circuit(n, levels, seed, pool, k, noise);
      },
      py::arg("n"), py::arg("levels"), py::arg("seed"),
      py::arg("pool") = std::vector<std::string>{"CNOT", "H", "S", "T", "RESET", "ID", "RANDMIX2"}, py::arg("k") = 2,
      py::arg("noise") = NoiseModel{});

  m.def("epsk_threshold", &epsk_threshold, py::arg("k"));
  m.def("cnot_threshold", &cnot_threshold);
  m.def(
      "theta_for",
      [](NoiseModel noise, int k, bool cnot_only) { return theta_dict(theta_for(noise, k, cnot_only)); },
      py::arg("noise"), py::arg("k") = 2, py::arg("cnot_only") = false);
  m.def("theta_for_circuit", [](const Circuit& c) { return theta_dict(theta_for_circuit(c)); }, py::arg("circuit"));
  m.def("decay_bound", &decay_bound, py::arg("theta"), py::arg("levels"));

  m.def(
      "pauli_coefficients",
      [](const CMatrix& op) {
        const CoeffVector v = coeffs_from_op(HermitianOp::from_matrix(op));
        return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(v.values().data(), static_cast<Eigen::Index>(v.size())));
      },
      py::arg("op"), "Coefficients Tr(op S); qubit q uses index bits (2q, 2q+1) with I=0, X=1, Z=2, Y=3.");
  m.def(
      "operator_from_coefficients",
      [](const Eigen::VectorXd& v) {
        const int n = log2_exact(v.size()) / 2;
        return op_from_coeffs(CoeffVector(n, std::vector<double>(v.data(), v.data() + v.size()))).matrix();
      },
      py::arg("coeffs"));

  m.def(
      "output_distinguishability",
      [](const Circuit& c, const py::object& rho, const py::object& tau) {
        return output_distinguishability(c, pair_from(c, rho, tau));
      },
      py::arg("circuit"), py::arg("rho") = py::none(), py::arg("tau") = py::none(),
      "rho/tau: density matrices, basis bit masks (bit q = qubit q), or None for |0..0> vs |1..1>.");
  m.def(
      "evolve_density",
      [](const Circuit& c, const CMatrix& rho, int levels) {
        return evolve_density(c, HermitianOp::from_matrix(rho), Cut::prefix(c, levels < 0 ? c.num_levels() : levels))
            .matrix();
      },
      py::arg("circuit"), py::arg("rho"), py::arg("levels") = -1);

  m.def(
      "is_consistent",
      [](const std::vector<std::pair<int, int>>& v, const Circuit& c) { return is_consistent(refs_from(v), c); },
      py::arg("qubits"), py::arg("circuit"), "qubits: list of (wire, time) pairs.");
  m.def(
      "consistent_sets",
      [](const Circuit& c, int max_size) {
        py::list out;
        for (const ConsistentSet& s : enumerate_consistent_sets(c, max_size)) out.append(refs_list(s.qubits));
        return out;
      },
      py::arg("circuit"), py::arg("max_size"));

  m.def(
      "audit_invariant",
      [](const Circuit& c, int max_set_size, const py::object& theta, const py::object& rho, const py::object& tau,
         int jobs) {
        const double th = theta.is_none() ? theta_for_circuit(c).theta : theta.cast<double>();
        InvariantReport r;
        {
          py::gil_scoped_release release;
          r = audit_invariant(CompiledCircuit(c), pair_from(c, rho, tau), th, max_set_size, 1'000'000, jobs);
        }
        py::list records;
        for (const InvariantRecord& rec : r.records) {
          py::dict d;
          d["qubits"] = refs_list(rec.qubits);
          d["dist"] = rec.dist ? py::cast(*rec.dist) : py::none();
          d["lhs"] = rec.lhs;
          d["rhs"] = rec.rhs;
          d["margin"] = rec.margin;
          d["pass"] = rec.pass;
          records.append(d);
        }
        py::dict out;
        out["theta"] = r.theta;
        out["min_margin"] = r.min_margin;
        out["all_pass"] = r.all_pass;
        out["records"] = records;
        return out;
      },
      py::arg("circuit"), py::arg("max_set_size") = 4, py::arg("theta") = py::none(), py::arg("rho") = py::none(),
      py::arg("tau") = py::none(), py::arg("jobs") = 1);

  m.def(
      "cnot_action",
      [](const std::string& pauli) {
        const SignedPauli r = cnot_pauli_action(PauliString::parse(pauli));
        return py::make_tuple(r.pauli.to_string(), r.sign);
      },
      py::arg("pauli"), "Conjugation of a two-qubit Pauli string such as 'XI' by CNOT (control first).");

  m.def(
      "verify",
      [](std::uint64_t seed, int cases) {
        py::list out;
        for (const SuiteResult& s : run_verification(seed, cases)) {
          py::dict d;
          d["suite"] = s.name;
          d["passed"] = s.passed;
          d["total"] = s.total;
          d["first_failure"] = s.first_failure;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("cases") = 50);

  py::register_exception<CircuitError>(m, "CircuitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GateError>(m, "GateError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
}
