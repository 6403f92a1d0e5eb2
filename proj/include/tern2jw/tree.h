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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tern2jw/pauli.h"

namespace tern2jw {

/// Link marks of a qubit node. Slot order x < y < z is the canonical traversal order.
enum class Label : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Label, 3> kAllLabels = {Label::X, Label::Y, Label::Z};

constexpr PauliLetter letter_of(Label label) {
    return static_cast<PauliLetter>(static_cast<std::uint8_t>(label) + 1);
}
char label_char(Label label);

/// Child slots of one qubit node; 0 marks a terminal.
using ChildSlots = std::array<QubitId, 3>;

/// One edge of a partially specified tree: `child` hangs below `parent` on link `label`.
struct TreeEdge {
    QubitId parent;
    Label label;
    QubitId child;
};

/// A rooted tree of m qubit nodes with ids 1..m. Every node has three link
/// slots, each holding another qubit node or a terminal, so a valid tree
/// always has exactly 2m + 1 terminals.
class TernaryTree {
  public:
    /// `children[q - 1]` holds the slots of qubit q. Validates ids, reachability and acyclicity.
    TernaryTree(QubitId root, std::vector<ChildSlots> children);

    std::size_t num_qubits() const {
        return children_.size();
    }
    QubitId root() const {
        return root_;
    }
    const ChildSlots &children(QubitId q) const;
    QubitId child(QubitId q, Label label) const {
        return children(q)[static_cast<std::size_t>(label)];
    }
    bool is_terminal(QubitId q, Label label) const {
        return child(q, label) == 0;
    }
    /// 0 for the root.
    QubitId parent(QubitId q) const;
    std::size_t non_terminal_children(QubitId q) const;
    /// A node with at least two non-terminal children.
    bool is_fork(QubitId q) const;
    std::size_t terminal_count() const;
    /// True when every node has at most one non-terminal child.
    bool is_chain() const;

    const std::vector<ChildSlots> &all_children() const {
        return children_;
    }

    /// Canonical text form with explicit terminals, e.g. "(q1 :x _ :y _ :z (q2 :x _ :y _ :z _))".
    std::string str() const;
    /// Text form that omits terminal slots, e.g. "(q1 :z (q2))".
    std::string compact_str() const;

    bool operator==(const TernaryTree &other) const {
        return root_ == other.root_ && children_ == other.children_;
    }

  private:
    QubitId root_;
    std::vector<ChildSlots> children_;
    std::vector<QubitId> parents_;
};

/// Grammar (whitespace-insensitive):
///     tree := "_" | "(" "q" INT [":x" tree] [":y" tree] [":z" tree] ")"
/// Omitted slots are terminals. Ids must be exactly 1..m.
TernaryTree parse_tree(std::string_view text);

/// Completes a partially specified tree by filling every missing slot with a terminal.
TernaryTree augment(QubitId root, std::span<const TreeEdge> edges);
/// Trees are always complete, so this is the identity.
inline TernaryTree augment(const TernaryTree &tree) {
    return tree;
}

struct PathStep {
    QubitId qubit;
    Label label;

    bool operator==(const PathStep &) const = default;
};

/// Root-to-terminal path; the last step's slot is the terminal.
using LeafPath = std::vector<PathStep>;

/// All 2m + 1 root-to-terminal paths, depth first with x < y < z.
std::vector<LeafPath> leaves(const TernaryTree &tree);

/// Product of the letters along a path, phase +1. Throws StructureError if the path is not a leaf path of `tree`.
PauliString path_product(const TernaryTree &tree, const LeafPath &path);

/// Path products of all leaves in canonical order, without validation.
std::vector<PauliString> leaf_products(const TernaryTree &tree);

struct Generator {
    LeafPath path;
    PauliString product;
};

struct GeneratorSet {
    std::size_t num_qubits = 0;
    std::vector<Generator> entries;

    std::vector<PauliString> products() const;
};

/// Leaf products in canonical order, checked to be pairwise anticommuting with unit squares.
GeneratorSet generators(const TernaryTree &tree);

struct ValidationReport {
    bool anticommuting = true;
    /// First (j, k), j < k, 0-based, that commutes.
    std::optional<std::pair<std::size_t, std::size_t>> commuting_pair;
    bool unit_squares = true;
    std::optional<std::size_t> bad_square;
    /// Product of all entries in order is a phase times the identity.
    bool complete = false;
    /// The product itself.
    std::optional<PauliString> total_product;

    bool ok() const {
        return anticommuting && unit_squares && complete;
    }
};

ValidationReport check_generator_set(std::span<const PauliString> generators);
ValidationReport check_generator_set(const GeneratorSet &set);

/// Qubit k's z-child is qubit k + 1; its generators are the Jordan-Wigner
/// strings Z..ZX, Z..ZY in leaf order followed by the all-Z string.
TernaryTree jw_chain(std::size_t num_qubits);

/// Complete ternary tree with `depth` link levels below the root (depth 0 is a
/// single node, depth 2 has 13 nodes). Ids are assigned breadth first from 1.
TernaryTree full_ternary(unsigned depth);

/// Node k + 1 attaches to a uniformly chosen free slot of nodes 1..k. Deterministic in `seed`.
TernaryTree random_tree(std::size_t num_qubits, std::uint64_t seed);

/// The JW generator with 0-based rank `rank` (ranks 0..2m-1 are Z^k X / Z^k Y, rank 2m is all-Z).
PauliString jw_generator(std::size_t num_qubits, std::size_t rank);

/// Identifies `p` as +-(JW generator). Returns the 0-based rank and the sign, or nothing
/// if `p` is not a real multiple of a JW generator.
std::optional<std::pair<std::size_t, int>> match_jw_generator(const PauliString &p);

/// Rewrites a string on physical qubits into chain positions: position i takes the letter of qubit permutation[i].
PauliString to_chain_frame(const PauliString &p, std::span<const QubitId> permutation);
/// Inverse of to_chain_frame.
PauliString from_chain_frame(const PauliString &p, std::span<const QubitId> permutation);

}  // namespace tern2jw
