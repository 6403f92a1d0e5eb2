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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tern2jw/clifford.h"

namespace tern2jw {

/// Parsed contents of a circuit file:
///
///     QUBITS 3        # optional header, before any gate
///     H 1
///     CZ 1 2
///     PERM 1 3 2      # optional, chain position -> qubit id
///     SIGNS + - + + + + +
struct CircuitDocument {
    std::optional<std::size_t> declared_qubits;
    std::vector<CliffordGate> gates;
    std::optional<std::vector<QubitId>> permutation;
    std::optional<std::vector<int>> signs;

    /// Largest qubit index referenced by any gate or by PERM.
    std::size_t max_qubit() const;
    /// Builds the circuit on `num_qubits` qubits (or the declared/inferred count when 0).
    Circuit circuit(std::size_t num_qubits = 0) const;
};

CircuitDocument parse_circuit_text(std::string_view text);

/// One gate per line, preceded by a QUBITS header.
std::string format_circuit(const Circuit &circuit);

std::string format_permutation(const std::vector<QubitId> &permutation);
std::string format_signs(const std::vector<int> &signs);

}  // namespace tern2jw
