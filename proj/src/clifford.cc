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

#include "tern2jw/clifford.h"

#include "tern2jw/errors.h"

namespace tern2jw {
namespace {

using L = PauliLetter;

struct SingleImage {
    PauliLetter letter;
    bool negate;
};

struct PairImage {
    PauliLetter a;
    PauliLetter b;
    bool negate;
};

// Images of X, Y, Z (index 1..3; index 0 is I -> I) under g . g^dagger.
// Derived once from the exact 2x2 matrices and frozen; the oracle tests re-check them.
constexpr SingleImage kSingleTable[6][4] = {
    /* H   */ {{L::I, false}, {L::Z, false}, {L::Y, true}, {L::X, false}},
    /* S   */ {{L::I, false}, {L::Y, false}, {L::X, true}, {L::Z, false}},
    /* SDG */ {{L::I, false}, {L::Y, true}, {L::X, false}, {L::Z, false}},
    /* X   */ {{L::I, false}, {L::X, false}, {L::Y, true}, {L::Z, true}},
    /* Y   */ {{L::I, false}, {L::X, true}, {L::Y, false}, {L::Z, true}},
    /* Z   */ {{L::I, false}, {L::X, true}, {L::Y, true}, {L::Z, false}},
};

// CZ = diag(1, 1, 1, -1). Rows index the first qubit's letter, columns the second's.
constexpr PairImage kCzTable[4][4] = {
    {{L::I, L::I, false}, {L::Z, L::X, false}, {L::Z, L::Y, false}, {L::I, L::Z, false}},
    {{L::X, L::Z, false}, {L::Y, L::Y, false}, {L::Y, L::X, true}, {L::X, L::I, false}},
    {{L::Y, L::Z, false}, {L::X, L::Y, true}, {L::X, L::X, false}, {L::Y, L::I, false}},
    {{L::Z, L::I, false}, {L::I, L::X, false}, {L::I, L::Y, false}, {L::Z, L::Z, false}},
};

// CX with the first target as control.
constexpr PairImage kCxTable[4][4] = {
    {{L::I, L::I, false}, {L::I, L::X, false}, {L::Z, L::Y, false}, {L::Z, L::Z, false}},
    {{L::X, L::X, false}, {L::X, L::I, false}, {L::Y, L::Z, false}, {L::Y, L::Y, true}},
    {{L::Y, L::X, false}, {L::Y, L::I, false}, {L::X, L::Z, true}, {L::X, L::Y, false}},
    {{L::Z, L::I, false}, {L::Z, L::X, false}, {L::I, L::Y, false}, {L::I, L::Z, false}},
};

std::string range_message(QubitId q, std::size_t num_qubits) {
    return "qubit " + std::to_string(q) + " outside 1.." + std::to_string(num_qubits);
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::SDG:
            return "SDG";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CX:
            return "CX";
        case GateKind::SWAP:
            return "SWAP";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (GateKind kind : kAllGateKinds) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

CliffordGate CliffordGate::single(GateKind kind, QubitId q) {
    if (is_two_qubit(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " takes two qubits");
    }
    if (q == 0) {
        throw IndexError("qubit ids start at 1");
    }
    return CliffordGate{kind, {q, 0}};
}

CliffordGate CliffordGate::pair(GateKind kind, QubitId a, QubitId b) {
    if (!is_two_qubit(kind)) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " takes one qubit");
    }
    if (a == 0 || b == 0) {
        throw IndexError("qubit ids start at 1");
    }
    if (a == b) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " targets must be distinct");
    }
    return CliffordGate{kind, {a, b}};
}

CliffordGate CliffordGate::inverse() const {
    switch (kind) {
        case GateKind::S:
            return CliffordGate{GateKind::SDG, targets};
        case GateKind::SDG:
            return CliffordGate{GateKind::S, targets};
        default:
            return *this;
    }
}

bool CliffordGate::cancels(const CliffordGate &other) const {
    CliffordGate inv = inverse();
    if (inv.kind != other.kind) {
        return false;
    }
    if (inv.targets == other.targets) {
        return true;
    }
    // CZ and SWAP are symmetric in their targets.
    bool symmetric = kind == GateKind::CZ || kind == GateKind::SWAP;
    return symmetric && inv.targets[0] == other.targets[1] && inv.targets[1] == other.targets[0];
}

std::string CliffordGate::str() const {
    std::string result(gate_name(kind));
    result += ' ';
    result += std::to_string(targets[0]);
    if (arity() == 2) {
        result += ' ';
        result += std::to_string(targets[1]);
    }
    return result;
}

std::ostream &operator<<(std::ostream &out, const CliffordGate &gate) {
    return out << gate.str();
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw SizeError("a circuit needs at least one qubit");
    }
}

Circuit::Circuit(std::size_t num_qubits, std::vector<CliffordGate> gates) : Circuit(num_qubits) {
    for (const auto &g : gates) {
        check(g);
    }
    gates_ = std::move(gates);
}

void Circuit::check(const CliffordGate &gate) const {
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        if (gate.targets[k] == 0 || gate.targets[k] > num_qubits_) {
            throw IndexError(gate.str() + ": " + range_message(gate.targets[k], num_qubits_));
        }
    }
    if (gate.arity() == 2 && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument(gate.str() + ": targets must be distinct");
    }
}

std::size_t Circuit::count(GateKind kind) const {
    std::size_t n = 0;
    for (const auto &g : gates_) {
        n += g.kind == kind;
    }
    return n;
}

void Circuit::append(const CliffordGate &gate) {
    check(gate);
    gates_.push_back(gate);
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw SizeError("cannot append a circuit on more qubits");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void conjugate_in_place(const CliffordGate &gate, PauliString &p) {
    const std::size_t m = p.num_qubits();
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        if (gate.targets[k] == 0 || gate.targets[k] > m) {
            throw IndexError(gate.str() + ": " + range_message(gate.targets[k], m));
        }
    }

    if (gate.arity() == 1) {
        QubitId q = gate.targets[0];
        const SingleImage &image = kSingleTable[static_cast<int>(gate.kind)][static_cast<int>(p.letter(q))];
        p.set_letter(q, image.letter);
        if (image.negate) {
            p.negate();
        }
        return;
    }

    QubitId a = gate.targets[0];
    QubitId b = gate.targets[1];
    PauliLetter la = p.letter(a);
    PauliLetter lb = p.letter(b);
    if (gate.kind == GateKind::SWAP) {
        p.set_letter(a, lb);
        p.set_letter(b, la);
        return;
    }
    const auto &table = gate.kind == GateKind::CZ ? kCzTable : kCxTable;
    const PairImage &image = table[static_cast<int>(la)][static_cast<int>(lb)];
    p.set_letter(a, image.a);
    p.set_letter(b, image.b);
    if (image.negate) {
        p.negate();
    }
}

PauliString conjugate(const CliffordGate &gate, const PauliString &p) {
    PauliString result = p;
    conjugate_in_place(gate, result);
    return result;
}

void conjugate_in_place(const Circuit &circuit, PauliString &p) {
    if (circuit.num_qubits() > p.num_qubits()) {
        throw SizeError(
            "circuit on " + std::to_string(circuit.num_qubits()) + " qubits cannot act on a " +
            std::to_string(p.num_qubits()) + "-qubit Pauli string");
    }
    for (const auto &g : circuit.gates()) {
        conjugate_in_place(g, p);
    }
}

PauliString conjugate(const Circuit &circuit, const PauliString &p) {
    PauliString result = p;
    conjugate_in_place(circuit, result);
    return result;
}

Circuit inverse(const Circuit &circuit) {
    std::vector<CliffordGate> gates;
    gates.reserve(circuit.size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        gates.push_back(it->inverse());
    }
    return Circuit(circuit.num_qubits(), std::move(gates));
}

Circuit peephole_cancel(const Circuit &circuit) {
    // A stack handles cascades like [H, CZ, CZ, H] in one pass.
    std::vector<CliffordGate> kept;
    kept.reserve(circuit.size());
    for (const auto &g : circuit.gates()) {
        if (!kept.empty() && kept.back().cancels(g)) {
            kept.pop_back();
        } else {
            kept.push_back(g);
        }
    }
    return Circuit(circuit.num_qubits(), std::move(kept));
}

}  // namespace tern2jw
