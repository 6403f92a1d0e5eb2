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
#include <span>
#include <string>
#include <vector>

#include "tern2jw/clifford.h"
#include "tern2jw/pauli.h"
#include "tern2jw/tree.h"

namespace tern2jw {

/// A permutation of link labels: `perm[old]` is the label the old slot moves to.
using LabelPerm = std::array<Label, 3>;

/// The transposition exchanging `a` and `b`.
LabelPerm swap_labels(Label a, Label b);

/// Single-qubit gate sequence on `q` whose conjugation permutes letters X, Y, Z like `perm` does
/// (up to sign): (x z) -> [H], (x y) -> [S], (y z) -> [H, S, H], 3-cycles as two transpositions.
std::vector<CliffordGate> relabel_gates(QubitId q, const LabelPerm &perm);

struct TreeRewrite {
    Circuit gates;
    TernaryTree tree;
};

/// Permutes the child slots of `q`, returning the gates that realise the permutation.
TreeRewrite relabel(const TernaryTree &tree, QubitId q, const LabelPerm &perm);

struct ForkMove {
    CliffordGate gate;
    TernaryTree tree;
};

/// Conjugation by CZ(q1, q2), where q2 is the x-child of q1, detaches q2 from the x branch and
/// re-attaches it on the y branch:
///
///     q1.x = q2, q2.z = T1, q1.y = T2    ->    q1.x = T1, q1.y = q2, q2.z = T2
///
/// Requires q2's x and y slots to be terminals. Throws StructureError naming the failing slot.
ForkMove fork_move(const TernaryTree &tree, QubitId q1);

/// Collapses all branches of `q1` into a single z-branch. Every branch below q1 must be a chain.
TreeRewrite straighten_fork(const TernaryTree &tree, QubitId q1);

struct StraightenOptions {
    /// Emit SWAP gates so that the final chain is in ascending qubit order (permutation = identity).
    bool materialize_swaps = false;
    /// After every relabel and fork move, check that the conjugated generators equal the current
    /// tree's generators up to sign and still anticommute. Quadratic per step; for tests.
    bool verify_steps = false;
};

/// Certificate of a tree -> Jordan-Wigner transformation.
///
/// For every leaf rank j, conjugating the tree's j-th generator by `circuit` and renaming qubit
/// permutation[i] to chain position i gives signs[jw_rank[j]] times the JW generator of rank
/// jw_rank[j]. All ranks are 0-based; `signs` is indexed by JW rank.
struct StraightenResult {
    Circuit circuit;
    std::vector<QubitId> permutation;
    std::vector<int> signs;
    std::vector<std::size_t> jw_rank;
    /// Pauli gates appended by fix_signs (already part of `circuit`).
    std::vector<CliffordGate> signfix;
    std::size_t fork_resolutions = 0;
};

StraightenResult straighten(const TernaryTree &tree, const StraightenOptions &options = {});

/// Appends a layer of Pauli gates so that signs of JW ranks 0..2m-1 become +1. The sign of the
/// all-Z rank is then fixed by the conserved total product and is only reported.
StraightenResult fix_signs(StraightenResult result);

/// Circuit text followed by PERM and SIGNS directive lines.
std::string format_certificate(const StraightenResult &result);

/// SWAP gates that move the content of qubit q to destination[q - 1].
Circuit permutation_swaps(std::size_t num_qubits, std::span<const QubitId> destination);

struct MappingResult {
    /// straighten(a), permutation SWAPs, then inverse(straighten(b)).
    Circuit circuit;
    /// target_leaf[j]: rank of b's generator that a's j-th generator maps to.
    std::vector<std::size_t> target_leaf;
    /// signs[j]: conjugated a-generator j equals signs[j] times b-generator target_leaf[j].
    std::vector<int> signs;
};

MappingResult map_between(const TernaryTree &a, const TernaryTree &b);

struct RankCheck {
    std::size_t leaf_rank = 0;
    std::optional<std::size_t> jw_rank;
    int sign = 0;
    bool ok = false;
};

struct CertificateReport {
    std::vector<RankCheck> ranks;
    /// The matched JW ranks are a permutation of 0..2m.
    bool bijective = false;

    bool ok() const;
    std::size_t failures() const;
};

/// Engine-side check of a certificate. Empty `signs` / `expected_jw_rank` skip those comparisons.
CertificateReport check_certificate(
    const TernaryTree &tree,
    const Circuit &circuit,
    std::span<const QubitId> permutation,
    std::span<const int> signs = {},
    std::span<const std::size_t> expected_jw_rank = {});

inline CertificateReport check_certificate(const TernaryTree &tree, const StraightenResult &result) {
    return check_certificate(tree, result.circuit, result.permutation, result.signs, result.jw_rank);
}

}  // namespace tern2jw
