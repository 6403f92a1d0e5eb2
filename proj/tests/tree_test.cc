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

#include "tern2jw/tree.h"

#include <algorithm>
#include <gtest/gtest.h>
#include <set>

#include "tern2jw/errors.h"
#include "tern2jw/oracle.h"
#include "test_util.h"

using namespace tern2jw;
using tern2jw::testing::kBinaryTree;
using tern2jw::testing::P;

namespace {

LeafPath path(std::initializer_list<std::pair<QubitId, char>> steps) {
    LeafPath out;
    for (auto [q, c] : steps) {
        out.push_back({q, c == 'x' ? Label::X : c == 'y' ? Label::Y : Label::Z});
    }
    return out;
}

std::vector<std::string> strs(const std::vector<PauliString> &ps) {
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.str());
    }
    return out;
}

}  // namespace

TEST(tree, parse_single_node) {
    auto t = parse_tree("(q1)");
    EXPECT_EQ(t.num_qubits(), 1u);
    EXPECT_EQ(t.root(), 1u);
    EXPECT_EQ(t.terminal_count(), 3u);
    EXPECT_EQ(t.str(), "(q1 :x _ :y _ :z _)");
    EXPECT_EQ(parse_tree("  ( q1 :x _ :z _ )\n"), t);
}

TEST(tree, parse_binary_tree) {
    auto t = parse_tree(kBinaryTree);
    EXPECT_EQ(t.num_qubits(), 3u);
    EXPECT_EQ(t.terminal_count(), 7u);
    EXPECT_EQ(t.child(1, Label::X), 2u);
    EXPECT_EQ(t.child(1, Label::Y), 3u);
    EXPECT_TRUE(t.is_terminal(1, Label::Z));
    EXPECT_EQ(t.parent(3), 1u);
    EXPECT_EQ(t.parent(1), 0u);
    EXPECT_TRUE(t.is_fork(1));
    EXPECT_FALSE(t.is_chain());
    EXPECT_EQ(t.compact_str(), kBinaryTree);
}

TEST(tree, parse_non_root_one) {
    auto t = parse_tree("(q2 :y (q1))");
    EXPECT_EQ(t.root(), 2u);
    EXPECT_EQ(t.child(2, Label::Y), 1u);
    EXPECT_EQ(parse_tree(t.str()), t);
}

TEST(tree, parse_errors) {
    auto fails = [](const char *text) {
        try {
            parse_tree(text);
        } catch (const ParseError &e) {
            EXPECT_GE(e.line(), 1u) << text;
            EXPECT_GE(e.column(), 1u) << text;
            return true;
        }
        return false;
    };
    EXPECT_TRUE(fails("(q1 :x (q1))"));
    EXPECT_TRUE(fails("(q1 :x (q3))"));
    EXPECT_TRUE(fails("(q0)"));
    EXPECT_TRUE(fails("(q1"));
    EXPECT_TRUE(fails("(q1 :x _ :x _)"));
    EXPECT_TRUE(fails("(q1 :z _ :x _)"));
    EXPECT_TRUE(fails("(q1 :w _)"));
    EXPECT_TRUE(fails("(q1) (q2)"));
    EXPECT_TRUE(fails("_"));
    EXPECT_TRUE(fails(""));
    EXPECT_TRUE(fails("(1)"));
}

TEST(tree, parse_error_location) {
    try {
        parse_tree("(q1\n  :x (q1))");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(tree, constructor_validates) {
    EXPECT_THROW(TernaryTree(1, {{2, 0, 0}, {1, 0, 0}}), StructureError);
    EXPECT_THROW(TernaryTree(1, {{2, 2, 0}, {0, 0, 0}}), StructureError);
    EXPECT_THROW(TernaryTree(1, {{0, 0, 0}, {0, 0, 0}}), StructureError);
    EXPECT_THROW(TernaryTree(3, {{0, 0, 0}}), IndexError);
    EXPECT_THROW(TernaryTree(1, {{4, 0, 0}, {0, 0, 0}}), IndexError);
}

TEST(tree, augment) {
    std::vector<TreeEdge> bin = {{1, Label::X, 2}, {1, Label::Y, 3}};
    auto t = augment(1, bin);
    EXPECT_EQ(t.num_qubits(), 3u);
    EXPECT_EQ(t.terminal_count(), 7u);
    EXPECT_EQ(t, parse_tree(kBinaryTree));

    EXPECT_EQ(augment(t), t);

    std::vector<TreeEdge> chain = {{1, Label::Z, 2}, {2, Label::Z, 3}};
    EXPECT_EQ(augment(1, chain).terminal_count(), 7u);
    EXPECT_EQ(augment(1, chain), jw_chain(3));

    std::vector<TreeEdge> none;
    EXPECT_EQ(augment(1, none).terminal_count(), 3u);

    std::vector<TreeEdge> twice = {{1, Label::Z, 2}, {1, Label::Z, 3}};
    EXPECT_THROW(augment(1, twice), StructureError);
}

TEST(tree, leaves_of_single_node) {
    auto ls = leaves(jw_chain(1));
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(ls[0], path({{1, 'x'}}));
    EXPECT_EQ(ls[1], path({{1, 'y'}}));
    EXPECT_EQ(ls[2], path({{1, 'z'}}));
}

TEST(tree, leaves_of_full_tree) {
    auto t = full_ternary(2);
    EXPECT_EQ(t.num_qubits(), 13u);
    auto ls = leaves(t);
    ASSERT_EQ(ls.size(), 27u);
    EXPECT_EQ(ls.front(), path({{1, 'x'}, {2, 'x'}, {5, 'x'}}));
    EXPECT_EQ(ls.back(), path({{1, 'z'}, {4, 'z'}, {13, 'z'}}));

    auto g = generators(t).products();
    EXPECT_EQ(g[0], P("XXIIXIIIIIIII"));
    EXPECT_EQ(g[1], P("XXIIYIIIIIIII"));
    EXPECT_EQ(g[2], P("XXIIZIIIIIIII"));
    EXPECT_EQ(g[3], P("XYIIIXIIIIIII"));
    EXPECT_EQ(g[26], P("ZIIZIIIIIIIIZ"));
}

TEST(tree, full_ternary_sizes) {
    EXPECT_EQ(full_ternary(0).num_qubits(), 1u);
    EXPECT_EQ(full_ternary(1).num_qubits(), 4u);
    EXPECT_EQ(leaves(full_ternary(1)).size(), 9u);
    EXPECT_EQ(full_ternary(3).num_qubits(), 40u);
    EXPECT_THROW(full_ternary(40), SizeError);
}

TEST(tree, path_product) {
    EXPECT_EQ(path_product(full_ternary(2), path({{1, 'x'}, {2, 'x'}, {5, 'y'}})), P("+XXIIYIIIIIIII"));
    EXPECT_EQ(path_product(parse_tree(kBinaryTree), path({{1, 'z'}})), P("+ZII"));
    EXPECT_EQ(path_product(jw_chain(3), path({{1, 'z'}, {2, 'z'}, {3, 'x'}})), P("+ZZX"));

    auto chain = jw_chain(3);
    EXPECT_THROW(path_product(chain, path({{1, 'z'}})), StructureError);
    EXPECT_THROW(path_product(chain, path({{1, 'x'}, {2, 'x'}})), StructureError);
    EXPECT_THROW(path_product(chain, path({{2, 'x'}})), StructureError);
    EXPECT_THROW(path_product(chain, LeafPath{}), StructureError);
}

TEST(tree, binary_tree_generators_as_a_set) {
    auto g = strs(generators(parse_tree(kBinaryTree)).products());
    std::set<std::string> got(g.begin(), g.end());
    std::set<std::string> expected;
    for (const char *s : {"ZII", "XZI", "YIZ", "XXI", "XYI", "YIX", "YIY"}) {
        expected.insert(P(s).str());
    }
    EXPECT_EQ(got.size(), 7u);
    EXPECT_EQ(got, expected);
}

TEST(tree, jw_chain_generators) {
    auto g = generators(jw_chain(3)).products();
    ASSERT_EQ(g.size(), 7u);
    std::vector<PauliString> expected = {P("XII"), P("YII"), P("ZXI"), P("ZYI"), P("ZZX"), P("ZZY"), P("ZZZ")};
    EXPECT_EQ(g, expected);

    auto one = generators(jw_chain(1)).products();
    EXPECT_EQ(one, (std::vector{P("X"), P("Y"), P("Z")}));

    EXPECT_THROW(jw_chain(0), SizeError);
}

TEST(tree, jw_chain_matches_jw_strings) {
    for (std::size_t m = 1; m <= 20; ++m) {
        auto g = generators(jw_chain(m)).products();
        ASSERT_EQ(g.size(), 2 * m + 1);
        for (std::size_t k = 1; k <= m; ++k) {
            const auto &ex = g[2 * k - 2];
            const auto &ey = g[2 * k - 1];
            EXPECT_EQ(ex.weight(), k);
            EXPECT_EQ(ey.weight(), k);
            for (QubitId q = 1; q < k; ++q) {
                EXPECT_EQ(ex.letter(q), PauliLetter::Z);
                EXPECT_EQ(ey.letter(q), PauliLetter::Z);
            }
            EXPECT_EQ(ex.letter(k), PauliLetter::X);
            EXPECT_EQ(ey.letter(k), PauliLetter::Y);
        }
        for (std::size_t r = 0; r <= 2 * m; ++r) {
            EXPECT_EQ(g[r], jw_generator(m, r));
            auto match = match_jw_generator(g[r]);
            ASSERT_TRUE(match.has_value());
            EXPECT_EQ(match->first, r);
            EXPECT_EQ(match->second, 1);
            auto neg = g[r];
            neg.negate();
            EXPECT_EQ(match_jw_generator(neg)->second, -1);
        }
    }
    EXPECT_FALSE(match_jw_generator(P("XX")).has_value());
    EXPECT_FALSE(match_jw_generator(P("+iZX")).has_value());
    EXPECT_FALSE(match_jw_generator(P("II")).has_value());
}

TEST(tree, check_generator_set_jw_chain_two) {
    auto report = check_generator_set(generators(jw_chain(2)));
    EXPECT_TRUE(report.ok());
    ASSERT_TRUE(report.total_product.has_value());

    // Reference value from dense matrices.
    ExactMatrix prod = ExactMatrix::identity(4);
    for (const auto &g : generators(jw_chain(2)).products()) {
        prod = prod * dense_pauli(g);
    }
    bool found = false;
    for (int k = 0; k < 4; ++k) {
        if (prod == dense_pauli(PauliString(std::vector<PauliLetter>(2, PauliLetter::I), Phase(k)))) {
            EXPECT_EQ(report.total_product->phase(), Phase(k));
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_TRUE(report.total_product->is_identity_up_to_phase());
    EXPECT_EQ(report.total_product->phase(), Phase::minus_one());
}

TEST(tree, check_generator_set_reports_failures) {
    std::vector<PauliString> tilde = {P("XZI"), P("YZI"), P("IXZ"), P("IYZ"), P("ZIX"), P("ZIY")};
    auto r = check_generator_set(tilde);
    EXPECT_TRUE(r.anticommuting);
    EXPECT_TRUE(r.unit_squares);
    EXPECT_FALSE(r.complete);

    std::vector<PauliString> repeated = {P("XI"), P("YI"), P("XI")};
    auto r2 = check_generator_set(repeated);
    EXPECT_FALSE(r2.anticommuting);
    ASSERT_TRUE(r2.commuting_pair.has_value());
    EXPECT_EQ(*r2.commuting_pair, (std::pair<std::size_t, std::size_t>{0, 2}));
    EXPECT_FALSE(r2.ok());

    std::vector<PauliString> bad_square = {P("+iX")};
    auto r3 = check_generator_set(bad_square);
    EXPECT_FALSE(r3.unit_squares);
    EXPECT_EQ(r3.bad_square, 0u);
}

TEST(tree, random_tree_examples) {
    EXPECT_EQ(random_tree(1, 0).num_qubits(), 1u);
    EXPECT_EQ(random_tree(1, 12345), jw_chain(1));
    EXPECT_EQ(random_tree(5, 7), random_tree(5, 7));
    EXPECT_TRUE(check_generator_set(generators(random_tree(50, 1))).ok());

    std::set<std::string> shapes;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        shapes.insert(random_tree(5, seed).str());
    }
    EXPECT_GT(shapes.size(), 10u);
}

TEST(tree, random_trees_are_valid) {
    for (std::size_t m = 1; m <= 12; ++m) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto t = random_tree(m, seed * 131 + m);
            EXPECT_EQ(t.terminal_count(), 2 * m + 1);
            EXPECT_EQ(leaves(t).size(), 2 * m + 1);
            EXPECT_TRUE(check_generator_set(generators(t)).ok());
            EXPECT_EQ(parse_tree(t.str()), t);
            EXPECT_EQ(parse_tree(t.compact_str()), t);
        }
    }
}

TEST(tree, first_fork_is_the_only_clash) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto t = random_tree(10, seed);
        auto ls = leaves(t);
        auto g = leaf_products(t);
        for (std::size_t a = 0; a < ls.size(); ++a) {
            for (std::size_t b = a + 1; b < ls.size(); ++b) {
                std::size_t common = 0;
                while (ls[a][common].qubit == ls[b][common].qubit && ls[a][common].label == ls[b][common].label) {
                    ++common;
                }
                QubitId fork = ls[a][common].qubit;
                ASSERT_EQ(fork, ls[b][common].qubit);
                for (QubitId q = 1; q <= t.num_qubits(); ++q) {
                    auto la = g[a].letter(q);
                    auto lb = g[b].letter(q);
                    bool clash = la != PauliLetter::I && lb != PauliLetter::I && la != lb;
                    EXPECT_EQ(clash, q == fork);
                }
            }
        }
    }
}

TEST(tree, chain_frame_round_trip) {
    std::vector<QubitId> perm = {3, 1, 2};
    auto p = P("-XYZ");
    auto c = to_chain_frame(p, perm);
    EXPECT_EQ(c, P("-ZXY"));
    EXPECT_EQ(from_chain_frame(c, perm), p);
}
