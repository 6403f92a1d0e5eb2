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

#include <gtest/gtest.h>

#include "tern2jw/circuit_text.h"
#include "tern2jw/errors.h"
#include "tern2jw/oracle.h"
#include "test_util.h"

using namespace tern2jw;
using tern2jw::testing::P;
using tern2jw::testing::random_circuit;
using tern2jw::testing::random_pauli;

namespace {

CliffordGate g1(GateKind k, QubitId q) {
    return CliffordGate::single(k, q);
}
CliffordGate g2(GateKind k, QubitId a, QubitId b) {
    return CliffordGate::pair(k, a, b);
}

}  // namespace

TEST(clifford, conjugate_gate_examples) {
    EXPECT_EQ(conjugate(g2(GateKind::CZ, 1, 2), P("+XI")), P("+XZ"));
    EXPECT_EQ(conjugate(g2(GateKind::CZ, 1, 2), P("+XX")), P("+YY"));
    EXPECT_EQ(oracle_conjugate(Circuit(1, {g1(GateKind::S, 1)}), P("+Y")), P("-X"));
    EXPECT_EQ(conjugate(g1(GateKind::S, 1), P("+Y")), P("-X"));
    EXPECT_EQ(conjugate(g1(GateKind::H, 1), P("+Z")), P("+X"));
    EXPECT_EQ(conjugate(g1(GateKind::H, 1), P("+Y")), P("-Y"));
    EXPECT_EQ(conjugate(g2(GateKind::SWAP, 1, 3), P("-iXYZ")), P("-iZYX"));
    EXPECT_THROW(conjugate(g1(GateKind::H, 3), P("XX")), IndexError);
}

TEST(clifford, cz_is_symmetric_and_cx_is_not) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        auto p = random_pauli(rng, 3);
        EXPECT_EQ(conjugate(g2(GateKind::CZ, 1, 3), p), conjugate(g2(GateKind::CZ, 3, 1), p));
        EXPECT_EQ(conjugate(g2(GateKind::SWAP, 2, 3), p), conjugate(g2(GateKind::SWAP, 3, 2), p));
    }
    EXPECT_EQ(conjugate(g2(GateKind::CX, 1, 2), P("XI")), P("XX"));
    EXPECT_EQ(conjugate(g2(GateKind::CX, 2, 1), P("XI")), P("XI"));
}

TEST(clifford, every_gate_matches_oracle_exhaustively) {
    for (std::size_t m = 1; m <= 2; ++m) {
        std::vector<CliffordGate> gates;
        for (GateKind k : kAllGateKinds) {
            if (is_two_qubit(k)) {
                if (m == 2) {
                    gates.push_back(g2(k, 1, 2));
                    gates.push_back(g2(k, 2, 1));
                }
            } else {
                for (QubitId q = 1; q <= m; ++q) {
                    gates.push_back(g1(k, q));
                }
            }
        }
        std::size_t patterns = std::size_t{1} << (2 * m);
        for (const auto &g : gates) {
            Circuit c(m, {g});
            for (std::size_t pat = 0; pat < patterns; ++pat) {
                for (int phase = 0; phase < 4; ++phase) {
                    std::vector<PauliLetter> letters(m);
                    for (std::size_t q = 0; q < m; ++q) {
                        letters[q] = static_cast<PauliLetter>((pat >> (2 * q)) & 3);
                    }
                    PauliString p(letters, Phase(phase));
                    EXPECT_EQ(conjugate(g, p), oracle_conjugate(c, p)) << g << " on " << p;
                }
            }
        }
    }
}

TEST(clifford, conjugate_circuit_examples) {
    Circuit c(3, {g2(GateKind::CZ, 1, 2), g2(GateKind::CZ, 2, 3)});
    EXPECT_EQ(conjugate(c, P("+XII")), P("+XZI"));
    EXPECT_EQ(conjugate(c, P("+ZZX")), P("+ZIX"));
    EXPECT_EQ(conjugate(Circuit(3), P("-iXYZ")), P("-iXYZ"));
}

TEST(clifford, circuit_order_is_application_order) {
    // H then S: X -> Z -> Z; S then H: X -> Y -> -Y.
    Circuit hs(1, {g1(GateKind::H, 1), g1(GateKind::S, 1)});
    Circuit sh(1, {g1(GateKind::S, 1), g1(GateKind::H, 1)});
    EXPECT_EQ(conjugate(hs, P("X")), P("Z"));
    EXPECT_EQ(conjugate(sh, P("X")), P("-Y"));
    EXPECT_EQ(oracle_conjugate(sh, P("X")), P("-Y"));
}

TEST(clifford, circuit_rejects_out_of_range_targets) {
    Circuit c(2);
    EXPECT_THROW(c.append(g1(GateKind::H, 3)), IndexError);
    EXPECT_THROW(c.append(g2(GateKind::CZ, 1, 5)), IndexError);
    EXPECT_THROW(g2(GateKind::CZ, 1, 1), std::invalid_argument);
    EXPECT_THROW(g1(GateKind::CZ, 1), std::invalid_argument);
    EXPECT_THROW(Circuit(0), SizeError);
}

TEST(clifford, invert_circuit) {
    EXPECT_EQ(inverse(Circuit(1, {g1(GateKind::S, 1)})).gates(), std::vector{g1(GateKind::SDG, 1)});
    EXPECT_EQ(
        inverse(Circuit(2, {g1(GateKind::H, 1), g2(GateKind::CZ, 1, 2)})).gates(),
        (std::vector{g2(GateKind::CZ, 1, 2), g1(GateKind::H, 1)}));

    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        std::size_t m = 1 + rng() % 6;
        auto c = random_circuit(rng, m, rng() % 51);
        auto p = random_pauli(rng, m);
        EXPECT_EQ(conjugate(inverse(c), conjugate(c, p)), p);
    }
}

TEST(clifford, peephole_examples) {
    EXPECT_TRUE(peephole_cancel(Circuit(1, {g1(GateKind::H, 1), g1(GateKind::H, 1)})).empty());
    EXPECT_EQ(
        peephole_cancel(Circuit(2, {g1(GateKind::S, 1), g1(GateKind::SDG, 1), g2(GateKind::CZ, 1, 2)})).gates(),
        std::vector{g2(GateKind::CZ, 1, 2)});

    Circuit nested(2, {g1(GateKind::H, 1), g2(GateKind::CZ, 1, 2), g2(GateKind::CZ, 1, 2), g1(GateKind::H, 1)});
    for (const auto &p : {P("XI"), P("IY"), P("ZZ"), P("-iYX")}) {
        EXPECT_EQ(conjugate(nested, p), p);
    }
    EXPECT_TRUE(peephole_cancel(nested).empty());

    EXPECT_TRUE(peephole_cancel(Circuit(2, {g2(GateKind::CZ, 1, 2), g2(GateKind::CZ, 2, 1)})).empty());
    EXPECT_EQ(peephole_cancel(Circuit(2, {g2(GateKind::CX, 1, 2), g2(GateKind::CX, 2, 1)})).size(), 2u);
    EXPECT_EQ(peephole_cancel(Circuit(1, {g1(GateKind::S, 1), g1(GateKind::S, 1)})).size(), 2u);
}

TEST(clifford, peephole_preserves_action) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
        std::size_t m = 1 + rng() % 3;
        // Few qubits and gate kinds so that cancellations actually happen.
        auto c = random_circuit(rng, m, 40);
        auto p = random_pauli(rng, m);
        auto reduced = peephole_cancel(c);
        EXPECT_LE(reduced.size(), c.size());
        EXPECT_EQ(conjugate(reduced, p), conjugate(c, p));
    }
}

TEST(clifford, conjugation_preserves_hermiticity_and_commutation) {
    std::mt19937_64 rng(10);
    for (int k = 0; k < 300; ++k) {
        std::size_t m = 1 + rng() % 6;
        auto c = random_circuit(rng, m, rng() % 30);
        auto p = random_pauli(rng, m, true);
        auto q = random_pauli(rng, m);
        EXPECT_TRUE(conjugate(c, p).is_hermitian());
        EXPECT_EQ(commutes(p, q), commutes(conjugate(c, p), conjugate(c, q)));
        EXPECT_EQ(conjugate(c, p * q), conjugate(c, p) * conjugate(c, q));
    }
}

TEST(circuit_text, parse_and_format) {
    auto doc = parse_circuit_text(
        "# header comment\n"
        "QUBITS 5\n"
        "H 1\n"
        "SDG 3   # trailing comment\n"
        "\n"
        "CZ 1 2\n"
        "SWAP 2 5\n"
        "PERM 2 1 3 4 5\n"
        "SIGNS + - + + + + + + + + +\n");
    ASSERT_EQ(doc.declared_qubits, 5u);
    Circuit c = doc.circuit();
    EXPECT_EQ(c.num_qubits(), 5u);
    EXPECT_EQ(c.gates(), (std::vector{g1(GateKind::H, 1), g1(GateKind::SDG, 3), g2(GateKind::CZ, 1, 2),
                                      g2(GateKind::SWAP, 2, 5)}));
    EXPECT_EQ(*doc.permutation, (std::vector<QubitId>{2, 1, 3, 4, 5}));
    EXPECT_EQ(doc.signs->size(), 11u);
    EXPECT_EQ((*doc.signs)[1], -1);

    EXPECT_EQ(format_circuit(c), "QUBITS 5\nH 1\nSDG 3\nCZ 1 2\nSWAP 2 5\n");
    EXPECT_EQ(parse_circuit_text(format_circuit(c)).circuit(), c);
}

TEST(circuit_text, infers_qubit_count_without_header) {
    EXPECT_EQ(parse_circuit_text("CX 4 2\n").circuit().num_qubits(), 4u);
}

TEST(circuit_text, errors_carry_line_numbers) {
    auto line_of = [](const char *text) -> std::size_t {
        try {
            parse_circuit_text(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("H 1\nFOO 2\n"), 2u);
    EXPECT_EQ(line_of("H 1\nCZ 1\n"), 2u);
    EXPECT_EQ(line_of("CZ 2 2\n"), 1u);
    EXPECT_EQ(line_of("QUBITS 2\nH 3\n"), 2u);
    EXPECT_EQ(line_of("H 1\nQUBITS 2\n"), 2u);
    EXPECT_EQ(line_of("H 0\n"), 1u);
    EXPECT_EQ(line_of("\n\nPERM 1 1\n"), 3u);
    EXPECT_EQ(line_of("SIGNS + x\n"), 1u);
}
