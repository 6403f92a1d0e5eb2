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

#include "tern2jw/circuit_text.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "tern2jw/errors.h"

namespace tern2jw {
namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back({line.substr(start, pos - start), start + 1});
        }
    }
    return tokens;
}

std::size_t parse_positive(const Token &token, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc() || ptr != token.text.data() + token.text.size() || value == 0) {
        throw ParseError("expected a positive integer, got '" + std::string(token.text) + "'", line_no, token.column);
    }
    return value;
}

QubitId parse_qubit(const Token &token, std::size_t line_no) {
    std::size_t value = parse_positive(token, line_no);
    if (value > std::numeric_limits<QubitId>::max()) {
        throw ParseError("qubit index too large", line_no, token.column);
    }
    return static_cast<QubitId>(value);
}

}  // namespace

std::size_t CircuitDocument::max_qubit() const {
    std::size_t result = 0;
    for (const auto &g : gates) {
        for (std::size_t k = 0; k < g.arity(); ++k) {
            result = std::max<std::size_t>(result, g.targets[k]);
        }
    }
    if (permutation) {
        for (QubitId q : *permutation) {
            result = std::max<std::size_t>(result, q);
        }
    }
    return result;
}

Circuit CircuitDocument::circuit(std::size_t num_qubits) const {
    std::size_t m = num_qubits;
    if (m == 0) {
        m = declared_qubits.value_or(max_qubit());
    }
    if (m == 0) {
        throw SizeError("circuit has no declared or referenced qubits");
    }
    return Circuit(m, gates);
}

CircuitDocument parse_circuit_text(std::string_view text) {
    CircuitDocument doc;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const Token &head = tokens.front();

        if (head.text == "QUBITS") {
            if (doc.declared_qubits) {
                throw ParseError("duplicate QUBITS header", line_no, head.column);
            }
            if (!doc.gates.empty()) {
                throw ParseError("QUBITS header must precede all gates", line_no, head.column);
            }
            if (tokens.size() != 2) {
                throw ParseError("QUBITS takes exactly one count", line_no, head.column);
            }
            doc.declared_qubits = parse_positive(tokens[1], line_no);
            continue;
        }

        if (head.text == "PERM") {
            if (doc.permutation) {
                throw ParseError("duplicate PERM directive", line_no, head.column);
            }
            std::vector<QubitId> perm;
            std::vector<bool> seen(tokens.size(), false);
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                QubitId q = parse_qubit(tokens[k], line_no);
                if (q >= tokens.size() || seen[q]) {
                    throw ParseError("PERM must list each of 1.." + std::to_string(tokens.size() - 1) + " once",
                                     line_no, tokens[k].column);
                }
                seen[q] = true;
                perm.push_back(q);
            }
            if (perm.empty()) {
                throw ParseError("PERM needs at least one entry", line_no, head.column);
            }
            doc.permutation = std::move(perm);
            continue;
        }

        if (head.text == "SIGNS") {
            if (doc.signs) {
                throw ParseError("duplicate SIGNS directive", line_no, head.column);
            }
            std::vector<int> signs;
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                if (tokens[k].text == "+") {
                    signs.push_back(1);
                } else if (tokens[k].text == "-") {
                    signs.push_back(-1);
                } else {
                    throw ParseError("SIGNS entries must be '+' or '-'", line_no, tokens[k].column);
                }
            }
            doc.signs = std::move(signs);
            continue;
        }

        auto kind = gate_kind_from_name(head.text);
        if (!kind) {
            throw ParseError("unknown gate '" + std::string(head.text) + "'", line_no, head.column);
        }
        std::size_t arity = is_two_qubit(*kind) ? 2 : 1;
        if (tokens.size() != arity + 1) {
            throw ParseError(std::string(head.text) + " takes " + std::to_string(arity) + " qubit index(es)",
                             line_no, head.column);
        }
        QubitId a = parse_qubit(tokens[1], line_no);
        if (arity == 1) {
            doc.gates.push_back(CliffordGate::single(*kind, a));
        } else {
            QubitId b = parse_qubit(tokens[2], line_no);
            if (a == b) {
                throw ParseError("two-qubit gate targets must be distinct", line_no, tokens[2].column);
            }
            doc.gates.push_back(CliffordGate::pair(*kind, a, b));
        }
        if (doc.declared_qubits && doc.max_qubit() > *doc.declared_qubits) {
            throw ParseError("gate references a qubit beyond QUBITS " + std::to_string(*doc.declared_qubits),
                             line_no, head.column);
        }
    }
    return doc;
}

std::string format_circuit(const Circuit &circuit) {
    std::string out = "QUBITS " + std::to_string(circuit.num_qubits()) + "\n";
    for (const auto &g : circuit.gates()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

std::string format_permutation(const std::vector<QubitId> &permutation) {
    std::string out = "PERM";
    for (QubitId q : permutation) {
        out += ' ';
        out += std::to_string(q);
    }
    return out;
}

std::string format_signs(const std::vector<int> &signs) {
    std::string out = "SIGNS";
    for (int s : signs) {
        out += s > 0 ? " +" : " -";
    }
    return out;
}

}  // namespace tern2jw
