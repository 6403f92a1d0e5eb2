// Copyright 2026 The tern2jw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tern2jw/circuit_text.h"
#include "tern2jw/cli.h"
#include "tern2jw/clifford.h"
#include "tern2jw/oracle.h"
#include "tern2jw/pauli.h"
#include "tern2jw/straighten.h"
#include "tern2jw/tree.h"

namespace py = pybind11;
using namespace tern2jw;

namespace {

std::string phase_prefix(Phase p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

py::dict report_dict(const ValidationReport &r) {
    py::dict d;
    d["ok"] = r.ok();
    d["anticommuting"] = r.anticommuting;
    d["commuting_pair"] = r.commuting_pair;
    d["unit_squares"] = r.unit_squares;
    d["bad_square"] = r.bad_square;
    d["complete"] = r.complete;
    d["total_product"] = r.total_product;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ternary qubit trees and their Clifford transformations to the Jordan-Wigner chain.";

    py::class_<PauliString>(m, "PauliString")
        .def(py::init([](const std::string &text) { return PauliString::parse(text); }), py::arg("text"))
        .def_static("identity", &PauliString::identity, py::arg("num_qubits"))
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("weight", &PauliString::weight)
        .def_property_readonly("phase", [](const PauliString &p) { return phase_prefix(p.phase()); })
        .def_property_readonly(
            "letters",
            [](const PauliString &p) {
                std::string out;
                for (auto l : p.letters()) {
                    out += letter_char(l);
                }
                return out;
            })
        .def("is_hermitian", &PauliString::is_hermitian)
        .def("commutes", [](const PauliString &a, const PauliString &b) { return commutes(a, b); })
        .def("__mul__", [](const PauliString &a, const PauliString &b) { return a * b; })
        .def("__neg__",
             [](PauliString p) {
                 p.negate();
                 return p;
             })
        .def(py::self == py::self)
        .def("__hash__", [](const PauliString &p) { return py::hash(py::str(p.str())); })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });

    py::class_<CliffordGate>(m, "Gate")
        .def(py::init([](const std::string &name, QubitId a, std::optional<QubitId> b) {
                 auto kind = gate_kind_from_name(name);
                 if (!kind) {
                     throw py::value_error("unknown gate " + name);
                 }
                 return b ? CliffordGate::pair(*kind, a, *b) : CliffordGate::single(*kind, a);
             }),
             py::arg("name"), py::arg("a"), py::arg("b") = py::none())
        .def_property_readonly("name", [](const CliffordGate &g) { return std::string(gate_name(g.kind)); })
        .def_property_readonly(
            "targets",
            [](const CliffordGate &g) {
                std::vector<QubitId> t(g.targets.begin(), g.targets.begin() + g.arity());
                return t;
            })
        .def("inverse", &CliffordGate::inverse)
        .def(py::self == py::self)
        .def("__str__", &CliffordGate::str)
        .def("__repr__", [](const CliffordGate &g) { return "Gate('" + g.str() + "')"; });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::size_t, std::vector<CliffordGate>>(), py::arg("num_qubits"),
             py::arg("gates") = std::vector<CliffordGate>{})
        .def_static(
            "from_text", [](const std::string &text) { return parse_circuit_text(text).circuit(); }, py::arg("text"))
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("gates", &Circuit::gates)
        .def("append", py::overload_cast<const CliffordGate &>(&Circuit::append), py::arg("gate"))
        .def("count", [](const Circuit &c, const std::string &name) {
            auto kind = gate_kind_from_name(name);
            if (!kind) {
                throw py::value_error("unknown gate " + name);
            }
            return c.count(*kind);
        })
        .def("inverse", [](const Circuit &c) { return inverse(c); })
        .def("peephole_cancel", [](const Circuit &c) { return peephole_cancel(c); })
        .def("__len__", &Circuit::size)
        .def(py::self == py::self)
        .def("__str__", [](const Circuit &c) { return format_circuit(c); });

    py::class_<TernaryTree>(m, "TernaryTree")
        .def(py::init([](const std::string &text) { return parse_tree(text); }), py::arg("text"))
        .def_property_readonly("num_qubits", &TernaryTree::num_qubits)
        .def_property_readonly("root", &TernaryTree::root)
        .def("children",
             [](const TernaryTree &t, QubitId q) {
                 auto c = t.children(q);
                 return std::vector<QubitId>(c.begin(), c.end());
             })
        .def("is_chain", &TernaryTree::is_chain)
        .def("terminal_count", &TernaryTree::terminal_count)
        .def("compact_str", &TernaryTree::compact_str)
        .def(
            "leaves",
            [](const TernaryTree &t) {
                std::vector<std::vector<std::pair<QubitId, char>>> out;
                for (const auto &path : leaves(t)) {
                    auto &steps = out.emplace_back();
                    for (const auto &s : path) {
                        steps.emplace_back(s.qubit, label_char(s.label));
                    }
                }
                return out;
            },
            "Root-to-terminal paths as (qubit, 'x'|'y'|'z') pairs, depth first.")
        .def("generators", [](const TernaryTree &t) { return generators(t).products(); })
        .def(py::self == py::self)
        .def("__str__", &TernaryTree::str)
        .def("__repr__", [](const TernaryTree &t) { return "TernaryTree('" + t.compact_str() + "')"; });

    m.def("jw_chain", &jw_chain, py::arg("num_qubits"));
    m.def("full_ternary", &full_ternary, py::arg("depth"));
    m.def("random_tree", &random_tree, py::arg("num_qubits"), py::arg("seed"));
    m.def("jw_generator", &jw_generator, py::arg("num_qubits"), py::arg("rank"));
    m.def(
        "check_generator_set",
        [](const std::vector<PauliString> &g) { return report_dict(check_generator_set(g)); }, py::arg("generators"));

    m.def(
        "conjugate", [](const Circuit &c, const PauliString &p) { return conjugate(c, p); }, py::arg("circuit"),
        py::arg("pauli"));
    m.def(
        "oracle_conjugate", [](const Circuit &c, const PauliString &p, std::size_t cap) {
            return oracle_conjugate(c, p, cap);
        },
        py::arg("circuit"), py::arg("pauli"), py::arg("cap") = kDefaultOracleCap);

    py::class_<StraightenResult>(m, "StraightenResult")
        .def_readonly("circuit", &StraightenResult::circuit)
        .def_readonly("permutation", &StraightenResult::permutation)
        .def_readonly("signs", &StraightenResult::signs)
        .def_readonly("jw_rank", &StraightenResult::jw_rank)
        .def_readonly("signfix", &StraightenResult::signfix)
        .def_readonly("fork_resolutions", &StraightenResult::fork_resolutions)
        .def("certificate", &format_certificate);

    m.def(
        "straighten",
        [](const TernaryTree &t, bool fix, bool swaps, bool verify_steps) {
            StraightenOptions options;
            options.materialize_swaps = swaps;
            options.verify_steps = verify_steps;
            auto r = straighten(t, options);
            return fix ? fix_signs(std::move(r)) : r;
        },
        py::arg("tree"), py::arg("fix_signs") = false, py::arg("swaps") = false, py::arg("verify_steps") = false);
    m.def(
        "check_certificate", [](const TernaryTree &t, const StraightenResult &r) { return check_certificate(t, r).ok(); },
        py::arg("tree"), py::arg("result"));
    m.def(
        "oracle_check",
        [](const TernaryTree &t, const StraightenResult &r, std::size_t cap) { return oracle_check(t, r, cap).ok(); },
        py::arg("tree"), py::arg("result"), py::arg("cap") = kDefaultOracleCap);

    py::class_<MappingResult>(m, "MappingResult")
        .def_readonly("circuit", &MappingResult::circuit)
        .def_readonly("target_leaf", &MappingResult::target_leaf)
        .def_readonly("signs", &MappingResult::signs);
    m.def("map_between", &map_between, py::arg("a"), py::arg("b"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args, const std::string &stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            int code = run_cli(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
