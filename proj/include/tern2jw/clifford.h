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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tern2jw/pauli.h"

namespace tern2jw {

enum class GateKind : std::uint8_t { H, S, SDG, X, Y, Z, CZ, CX, SWAP };

inline constexpr std::array<GateKind, 9> kAllGateKinds = {
    GateKind::H, GateKind::S, GateKind::SDG, GateKind::X, GateKind::Y,
    GateKind::Z, GateKind::CZ, GateKind::CX, GateKind::SWAP};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

constexpr bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CZ || kind == GateKind::CX || kind == GateKind::SWAP;
}

/// One Clifford gate. Single-qubit kinds leave targets[1] at 0. For CX targets[0] is the control.
struct CliffordGate {
    GateKind kind;
    std::array<QubitId, 2> targets;

    static CliffordGate single(GateKind kind, QubitId q);
    static CliffordGate pair(GateKind kind, QubitId a, QubitId b);

    std::size_t arity() const {
        return is_two_qubit(kind) ? 2 : 1;
    }
    CliffordGate inverse() const;
    /// True when `*this` followed by `other` is the identity.
    bool cancels(const CliffordGate &other) const;
    /// "H 1", "CZ 1 2".
    std::string str() const;

    bool operator==(const CliffordGate &) const = default;
};

/// An ordered gate list. The first gate listed acts first on states, so the
/// circuit [g1, ..., gL] implements U = gL ... g1.
class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits);
    Circuit(std::size_t num_qubits, std::vector<CliffordGate> gates);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<CliffordGate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }
    std::size_t count(GateKind kind) const;

    void append(const CliffordGate &gate);
    void append(const Circuit &other);

    bool operator==(const Circuit &) const = default;

  private:
    void check(const CliffordGate &gate) const;

    std::size_t num_qubits_;
    std::vector<CliffordGate> gates_;
};

/// P <- g P g^dagger, exact including phase.
void conjugate_in_place(const CliffordGate &gate, PauliString &p);
PauliString conjugate(const CliffordGate &gate, const PauliString &p);
/// Ad_U(P) for U = gL ... g1.
PauliString conjugate(const Circuit &circuit, const PauliString &p);
void conjugate_in_place(const Circuit &circuit, PauliString &p);

/// Reversed order with each gate inverted, so that conjugating by the result undoes `circuit`.
Circuit inverse(const Circuit &circuit);

/// Repeatedly removes adjacent gate pairs that multiply to the identity.
Circuit peephole_cancel(const Circuit &circuit);

std::ostream &operator<<(std::ostream &out, const CliffordGate &gate);

}  // namespace tern2jw
