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

#include "tern2jw/oracle.h"

#include <algorithm>
#include <numeric>

#include "tern2jw/errors.h"

namespace tern2jw {
namespace {

constexpr GaussInt kZero{0, 0};
constexpr GaussInt kOne{1, 0};
constexpr GaussInt kMinusOne{-1, 0};
constexpr GaussInt kI{0, 1};
constexpr GaussInt kMinusI{0, -1};

GaussInt power_of_i(int exponent) {
    static constexpr GaussInt kPowers[] = {kOne, kI, kMinusOne, kMinusI};
    return kPowers[((exponent % 4) + 4) % 4];
}

void check_cap(std::size_t num_qubits, std::size_t cap) {
    if (num_qubits > cap) {
        throw SizeError(
            "dense oracle limited to " + std::to_string(cap) + " qubits, got " + std::to_string(num_qubits));
    }
    if (num_qubits >= 16) {
        throw SizeError("dense oracle cannot represent " + std::to_string(num_qubits) + " qubits");
    }
}

// Bit of `index` that carries qubit q when qubit 1 is the most significant factor.
std::size_t bit_of(QubitId q, std::size_t num_qubits) {
    return num_qubits - q;
}

using Small = std::vector<std::vector<GaussInt>>;

Small local_matrix(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return {{kOne, kOne}, {kOne, kMinusOne}};
        case GateKind::S:
            return {{kOne, kZero}, {kZero, kI}};
        case GateKind::SDG:
            return {{kOne, kZero}, {kZero, kMinusI}};
        case GateKind::X:
            return {{kZero, kOne}, {kOne, kZero}};
        case GateKind::Y:
            return {{kZero, kMinusI}, {kI, kZero}};
        case GateKind::Z:
            return {{kOne, kZero}, {kZero, kMinusOne}};
        case GateKind::CZ:
            return {{kOne, kZero, kZero, kZero},
                    {kZero, kOne, kZero, kZero},
                    {kZero, kZero, kOne, kZero},
                    {kZero, kZero, kZero, kMinusOne}};
        case GateKind::CX:
            return {{kOne, kZero, kZero, kZero},
                    {kZero, kOne, kZero, kZero},
                    {kZero, kZero, kZero, kOne},
                    {kZero, kZero, kOne, kZero}};
        case GateKind::SWAP:
            return {{kOne, kZero, kZero, kZero},
                    {kZero, kZero, kOne, kZero},
                    {kZero, kOne, kZero, kZero},
                    {kZero, kZero, kZero, kOne}};
    }
    throw InternalError("unknown gate kind");
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m.at(k, k) = kOne;
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw SizeError("matrix dimensions differ");
    }
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            GaussInt a = at(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                GaussInt b = rhs.at(k, j);
                if (!b.is_zero()) {
                    out.at(i, j) = out.at(i, j) + a * b;
                }
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out.at(j, i) = at(i, j).conj();
        }
    }
    return out;
}

void ExactMatrix::remove_content() {
    std::int64_t g = 0;
    for (const auto &e : entries_) {
        g = std::gcd(g, std::gcd(e.re, e.im));
    }
    if (g > 1) {
        for (auto &e : entries_) {
            e.re /= g;
            e.im /= g;
        }
    }
}

ExactMatrix dense_pauli(const PauliString &p, std::size_t cap) {
    const std::size_t m = p.num_qubits();
    check_cap(m, cap);
    const std::size_t dim = std::size_t{1} << m;
    std::size_t xmask = 0;
    for (QubitId q = 1; q <= m; ++q) {
        PauliLetter l = p.letter(q);
        if (l == PauliLetter::X || l == PauliLetter::Y) {
            xmask |= std::size_t{1} << bit_of(q, m);
        }
    }
    ExactMatrix out(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col ^ xmask;
        GaussInt value = power_of_i(p.phase().exponent());
        for (QubitId q = 1; q <= m; ++q) {
            bool row_bit = (row >> bit_of(q, m)) & 1;
            switch (p.letter(q)) {
                case PauliLetter::I:
                case PauliLetter::X:
                    break;
                case PauliLetter::Y:
                    value = value * (row_bit ? kI : kMinusI);
                    break;
                case PauliLetter::Z:
                    value = value * (row_bit ? kMinusOne : kOne);
                    break;
            }
        }
        out.at(row, col) = value;
    }
    return out;
}

ExactMatrix dense_gate(const CliffordGate &gate, std::size_t num_qubits, std::size_t cap) {
    check_cap(num_qubits, cap);
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        if (gate.targets[k] == 0 || gate.targets[k] > num_qubits) {
            throw IndexError(gate.str() + ": target outside 1.." + std::to_string(num_qubits));
        }
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const Small local = local_matrix(gate.kind);
    const std::size_t n_local = local.size();

    // Local index: first target is the high bit.
    std::vector<std::size_t> bits;
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        bits.push_back(bit_of(gate.targets[k], num_qubits));
    }
    auto local_index = [&](std::size_t global) {
        std::size_t idx = 0;
        for (std::size_t b : bits) {
            idx = (idx << 1) | ((global >> b) & 1);
        }
        return idx;
    };
    auto with_local = [&](std::size_t global, std::size_t idx) {
        for (std::size_t k = bits.size(); k-- > 0;) {
            std::size_t bit = std::size_t{1} << bits[k];
            global = (idx & 1) ? (global | bit) : (global & ~bit);
            idx >>= 1;
        }
        return global;
    };

    ExactMatrix out(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t lc = local_index(col);
        for (std::size_t lr = 0; lr < n_local; ++lr) {
            if (!local[lr][lc].is_zero()) {
                out.at(with_local(col, lr), col) = local[lr][lc];
            }
        }
    }
    return out;
}

ExactMatrix dense_circuit(const Circuit &circuit, std::size_t cap) {
    check_cap(circuit.num_qubits(), cap);
    ExactMatrix u = ExactMatrix::identity(std::size_t{1} << circuit.num_qubits());
    for (const auto &g : circuit.gates()) {
        u = dense_gate(g, circuit.num_qubits(), cap) * u;
        u.remove_content();
    }
    return u;
}

PauliString oracle_conjugate(const ExactMatrix &unitary, const PauliString &p, std::size_t cap) {
    const std::size_t m = p.num_qubits();
    check_cap(m, cap);
    if (unitary.dim() != (std::size_t{1} << m)) {
        throw SizeError("circuit matrix and Pauli string sizes differ");
    }
    const ExactMatrix mp = dense_pauli(p, cap);
    const ExactMatrix lhs = unitary * mp;
    const ExactMatrix image = lhs * unitary.adjoint();

    const std::size_t dim = image.dim();
    std::optional<std::size_t> xmask;
    for (std::size_t col = 0; col < dim; ++col) {
        if (!image.at(0, col).is_zero()) {
            if (xmask) {
                throw InternalError("conjugated operator is not a Pauli string");
            }
            xmask = col;
        }
    }
    if (!xmask) {
        throw InternalError("conjugated operator has an empty row");
    }

    const GaussInt anchor = image.at(0, *xmask);
    std::vector<PauliLetter> letters(m);
    int y_count = 0;
    for (QubitId q = 1; q <= m; ++q) {
        std::size_t bit = std::size_t{1} << bit_of(q, m);
        bool x = (*xmask & bit) != 0;
        GaussInt probe = image.at(bit, bit ^ *xmask);
        bool z;
        if (probe == anchor) {
            z = false;
        } else if (probe == -anchor) {
            z = true;
        } else {
            throw InternalError("conjugated operator is not a Pauli string");
        }
        letters[q - 1] = x ? (z ? PauliLetter::Y : PauliLetter::X) : (z ? PauliLetter::Z : PauliLetter::I);
        y_count += x && z;
    }
    // anchor = scale * i^phase * (-i)^y_count.
    GaussInt scaled = anchor * power_of_i(y_count);
    int phase;
    if (scaled.im == 0 && scaled.re != 0) {
        phase = scaled.re > 0 ? 0 : 2;
    } else if (scaled.re == 0 && scaled.im != 0) {
        phase = scaled.im > 0 ? 1 : 3;
    } else {
        throw InternalError("conjugated operator has a non-unit phase");
    }

    PauliString result(std::move(letters), Phase(phase));
    if (lhs != dense_pauli(result, cap) * unitary) {
        throw InternalError("oracle failed to confirm U M(P) = M(P') U");
    }
    return result;
}

PauliString oracle_conjugate(const Circuit &circuit, const PauliString &p, std::size_t cap) {
    if (circuit.num_qubits() != p.num_qubits()) {
        throw SizeError("circuit and Pauli string sizes differ");
    }
    return oracle_conjugate(dense_circuit(circuit, cap), p, cap);
}

bool OracleReport::ok() const {
    return !ranks.empty() && failures() == 0;
}

std::size_t OracleReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(ranks.begin(), ranks.end(), [](const OracleRankCheck &r) { return !r.ok; }));
}

OracleReport oracle_check(const TernaryTree &tree, const StraightenResult &result, std::size_t cap) {
    const std::size_t m = tree.num_qubits();
    check_cap(m, cap);
    if (result.permutation.size() != m || result.circuit.num_qubits() != m) {
        throw SizeError("straighten result does not match the tree size");
    }
    const bool recorded_ranks = !result.jw_rank.empty();
    const bool recorded_signs = !result.signs.empty();
    if ((recorded_ranks && result.jw_rank.size() != 2 * m + 1) ||
        (recorded_signs && result.signs.size() != 2 * m + 1)) {
        throw SizeError("straighten result must carry 2m+1 ranks and signs");
    }

    const ExactMatrix u = dense_circuit(result.circuit, cap);
    const auto paths = leaves(tree);
    OracleReport report;
    std::vector<bool> seen(2 * m + 1, false);
    for (std::size_t j = 0; j < paths.size(); ++j) {
        OracleRankCheck check{j, std::nullopt, 0, false};
        PauliString chain = to_chain_frame(oracle_conjugate(u, path_product(tree, paths[j]), cap), result.permutation);
        if (recorded_ranks) {
            std::size_t rank = result.jw_rank[j];
            if (rank > 2 * m) {
                report.ranks.push_back(check);
                continue;
            }
            PauliString expected = jw_generator(m, rank);
            int sign = recorded_signs ? result.signs[rank] : (chain.phase() == Phase::one() ? 1 : -1);
            if (sign < 0) {
                expected.negate();
            }
            check.jw_rank = rank;
            check.sign = sign;
            check.ok = chain == expected;
        } else if (auto match = match_jw_generator(chain)) {
            check.jw_rank = match->first;
            check.sign = match->second;
            check.ok = !seen[match->first] && (!recorded_signs || result.signs[match->first] == match->second);
            seen[match->first] = true;
        }
        report.ranks.push_back(check);
    }
    return report;
}

}  // namespace tern2jw
