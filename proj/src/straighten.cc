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

#include "tern2jw/straighten.h"

#include <algorithm>

#include "tern2jw/circuit_text.h"
#include "tern2jw/errors.h"

namespace tern2jw {
namespace {

constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;
constexpr std::size_t kZ = 2;

std::string slot_name(QubitId q, std::size_t s) {
    return std::string(1, "xyz"[s]) + " slot of q" + std::to_string(q);
}

// Mutable copy of a tree used while rewriting. Ids are 1-based, 0 is a terminal.
struct WorkTree {
    QubitId root;
    std::vector<ChildSlots> children;
    std::vector<QubitId> parent;

    explicit WorkTree(const TernaryTree &tree)
        : root(tree.root()), children(tree.all_children()), parent(tree.num_qubits(), 0) {
        for (std::size_t q = 1; q <= children.size(); ++q) {
            for (QubitId c : children[q - 1]) {
                if (c != 0) {
                    parent[c - 1] = static_cast<QubitId>(q);
                }
            }
        }
    }

    std::size_t size() const {
        return children.size();
    }
    QubitId &at(QubitId q, std::size_t s) {
        return children[q - 1][s];
    }
    QubitId at(QubitId q, std::size_t s) const {
        return children[q - 1][s];
    }
    void set(QubitId q, std::size_t s, QubitId child) {
        children[q - 1][s] = child;
        if (child != 0) {
            parent[child - 1] = q;
        }
    }
    std::size_t non_terminal(QubitId q) const {
        const auto &c = children[q - 1];
        return (c[0] != 0) + (c[1] != 0) + (c[2] != 0);
    }
    /// Slot of the only non-terminal child, if the node has exactly one.
    std::optional<std::size_t> sole_child_slot(QubitId q) const {
        if (non_terminal(q) != 1) {
            return std::nullopt;
        }
        for (std::size_t s = 0; s < 3; ++s) {
            if (at(q, s) != 0) {
                return s;
            }
        }
        return std::nullopt;
    }
    void check_qubit(QubitId q) const {
        if (q == 0 || q > children.size()) {
            throw IndexError("unknown qubit q" + std::to_string(q));
        }
    }
    TernaryTree freeze() const {
        return TernaryTree(root, children);
    }
};

constexpr bool is_identity(const LabelPerm &p) {
    return p[0] == Label::X && p[1] == Label::Y && p[2] == Label::Z;
}

void check_perm(const LabelPerm &perm) {
    std::array<bool, 3> hit{};
    for (Label l : perm) {
        hit[static_cast<std::size_t>(l)] = true;
    }
    if (!hit[0] || !hit[1] || !hit[2]) {
        throw std::invalid_argument("label map is not a permutation of {x, y, z}");
    }
}

void transposition_gates(QubitId q, Label a, Label b, std::vector<CliffordGate> &out) {
    auto lo = std::min(a, b);
    auto hi = std::max(a, b);
    if (lo == Label::X && hi == Label::Z) {
        out.push_back(CliffordGate::single(GateKind::H, q));
    } else if (lo == Label::X && hi == Label::Y) {
        out.push_back(CliffordGate::single(GateKind::S, q));
    } else {
        out.push_back(CliffordGate::single(GateKind::H, q));
        out.push_back(CliffordGate::single(GateKind::S, q));
        out.push_back(CliffordGate::single(GateKind::H, q));
    }
}

void apply_relabel(WorkTree &tree, QubitId q, const LabelPerm &perm, Circuit &out) {
    for (const auto &g : relabel_gates(q, perm)) {
        out.append(g);
    }
    ChildSlots old = tree.children[q - 1];
    for (std::size_t s = 0; s < 3; ++s) {
        tree.children[q - 1][static_cast<std::size_t>(perm[s])] = old[s];
    }
}

CliffordGate apply_fork_move(WorkTree &tree, QubitId q1) {
    tree.check_qubit(q1);
    QubitId q2 = tree.at(q1, kX);
    if (q2 == 0) {
        throw StructureError("fork move needs a qubit node on the " + slot_name(q1, kX) + ", found a terminal");
    }
    if (tree.at(q2, kX) != 0) {
        throw StructureError("fork move needs a terminal on the " + slot_name(q2, kX));
    }
    if (tree.at(q2, kY) != 0) {
        throw StructureError("fork move needs a terminal on the " + slot_name(q2, kY));
    }
    QubitId t1 = tree.at(q2, kZ);
    QubitId t2 = tree.at(q1, kY);
    tree.set(q1, kX, t1);
    tree.set(q2, kZ, t2);
    tree.set(q1, kY, q2);
    return CliffordGate::pair(GateKind::CZ, q1, q2);
}

bool branch_is_chain(const WorkTree &tree, QubitId start) {
    for (QubitId q = start; q != 0;) {
        if (tree.non_terminal(q) > 1) {
            return false;
        }
        auto s = tree.sole_child_slot(q);
        q = s ? tree.at(q, *s) : 0;
    }
    return true;
}

// Holds the working state of one straightening run, with optional step-by-step verification.
class Straightener {
  public:
    Straightener(const TernaryTree &tree, bool verify_steps)
        : work_(tree), circuit_(tree.num_qubits()), verify_(verify_steps) {
        if (verify_) {
            tracked_ = leaf_products(tree);
        }
    }

    WorkTree &tree() {
        return work_;
    }
    Circuit &circuit() {
        return circuit_;
    }

    void relabel(QubitId q, const LabelPerm &perm) {
        apply_relabel(work_, q, perm, circuit_);
        step();
    }

    void fork_move(QubitId q1) {
        circuit_.append(apply_fork_move(work_, q1));
        step();
    }

    void emit(GateKind kind, QubitId q) {
        circuit_.append(CliffordGate::single(kind, q));
    }

    void straighten_fork(QubitId q1) {
        work_.check_qubit(q1);
        for (std::size_t s = 0; s < 3; ++s) {
            if (!branch_is_chain(work_, work_.at(q1, s))) {
                throw StructureError("the branch on the " + slot_name(q1, s) + " contains a fork");
            }
        }
        if (work_.at(q1, kX) == 0 && work_.at(q1, kY) == 0) {
            return;
        }
        while (work_.at(q1, kX) != 0 || work_.at(q1, kZ) != 0) {
            if (work_.at(q1, kX) == 0) {
                relabel(q1, swap_labels(Label::X, Label::Z));
            }
            QubitId q2 = work_.at(q1, kX);
            if (auto s = work_.sole_child_slot(q2); s && *s != kZ) {
                relabel(q2, swap_labels(static_cast<Label>(*s), Label::Z));
            }
            fork_move(q1);
        }
        // Only the y branch is left. S then H sends y -> z, z -> x, x -> y.
        emit(GateKind::S, q1);
        emit(GateKind::H, q1);
        ChildSlots old = work_.children[q1 - 1];
        work_.children[q1 - 1] = {old[kZ], old[kX], old[kY]};
        step();
    }

    /// Deepest fork (no fork below it), smallest id on ties; 0 when the tree is a chain.
    QubitId next_fork() const {
        const std::size_t m = work_.size();
        std::vector<QubitId> order;
        order.reserve(m);
        order.push_back(work_.root);
        for (std::size_t k = 0; k < order.size(); ++k) {
            for (QubitId c : work_.children[order[k] - 1]) {
                if (c != 0) {
                    order.push_back(c);
                }
            }
        }
        std::vector<bool> fork_below(m, false);
        QubitId best = 0;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            QubitId q = *it;
            bool is_fork = work_.non_terminal(q) >= 2;
            if (is_fork && !fork_below[q - 1] && (best == 0 || q < best)) {
                best = q;
            }
            if (QubitId p = work_.parent[q - 1]; p != 0 && (is_fork || fork_below[q - 1])) {
                fork_below[p - 1] = true;
            }
        }
        return best;
    }

    /// Turns every single-child link of the final chain into a z link; returns the chain order.
    std::vector<QubitId> align_chain() {
        std::vector<QubitId> order;
        order.reserve(work_.size());
        for (QubitId q = work_.root; q != 0;) {
            order.push_back(q);
            auto s = work_.sole_child_slot(q);
            if (!s) {
                if (work_.non_terminal(q) != 0) {
                    throw InternalError("fork left after straightening");
                }
                break;
            }
            if (*s != kZ) {
                relabel(q, swap_labels(static_cast<Label>(*s), Label::Z));
            }
            q = work_.at(q, kZ);
        }
        if (order.size() != work_.size()) {
            throw InternalError("straightened tree is not a single chain");
        }
        return order;
    }

  private:
    void step() {
        if (!verify_) {
            return;
        }
        for (std::size_t k = verified_gates_; k < circuit_.size(); ++k) {
            for (auto &p : tracked_) {
                conjugate_in_place(circuit_.gates()[k], p);
            }
        }
        verified_gates_ = circuit_.size();

        auto key = [](const PauliString &p) {
            return std::vector<PauliLetter>(p.letters().begin(), p.letters().end());
        };
        std::vector<std::vector<PauliLetter>> have;
        std::vector<std::vector<PauliLetter>> want;
        for (const auto &p : tracked_) {
            if (!p.is_hermitian()) {
                throw InternalError("conjugated generator lost hermiticity");
            }
            have.push_back(key(p));
        }
        for (const auto &p : leaf_products(work_.freeze())) {
            want.push_back(key(p));
        }
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want) {
            throw InternalError("conjugated generators no longer match the rewritten tree");
        }
        if (!check_generator_set(tracked_).anticommuting) {
            throw InternalError("conjugated generators stopped anticommuting");
        }
    }

    WorkTree work_;
    Circuit circuit_;
    bool verify_;
    std::vector<PauliString> tracked_;
    std::size_t verified_gates_ = 0;
};

}  // namespace

LabelPerm swap_labels(Label a, Label b) {
    LabelPerm p{Label::X, Label::Y, Label::Z};
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    return p;
}

std::vector<CliffordGate> relabel_gates(QubitId q, const LabelPerm &perm) {
    check_perm(perm);
    std::vector<CliffordGate> gates;
    if (is_identity(perm)) {
        return gates;
    }
    std::size_t fixed = 0;
    for (std::size_t s = 0; s < 3; ++s) {
        fixed += static_cast<std::size_t>(perm[s]) == s;
    }
    if (fixed == 1) {
        for (std::size_t s = 0; s < 3; ++s) {
            if (static_cast<std::size_t>(perm[s]) != s) {
                transposition_gates(q, static_cast<Label>(s), perm[s], gates);
                break;
            }
        }
        return gates;
    }
    // 3-cycle: first (x perm(x)), then perm o (x perm(x)), which is again a transposition.
    LabelPerm first = swap_labels(Label::X, perm[0]);
    LabelPerm second{};
    for (std::size_t s = 0; s < 3; ++s) {
        second[static_cast<std::size_t>(first[s])] = perm[s];
    }
    transposition_gates(q, Label::X, perm[0], gates);
    for (std::size_t s = 0; s < 3; ++s) {
        if (static_cast<std::size_t>(second[s]) != s) {
            transposition_gates(q, static_cast<Label>(s), second[s], gates);
            break;
        }
    }
    return gates;
}

TreeRewrite relabel(const TernaryTree &tree, QubitId q, const LabelPerm &perm) {
    WorkTree work(tree);
    work.check_qubit(q);
    Circuit gates(tree.num_qubits());
    apply_relabel(work, q, perm, gates);
    return {std::move(gates), work.freeze()};
}

ForkMove fork_move(const TernaryTree &tree, QubitId q1) {
    WorkTree work(tree);
    CliffordGate gate = apply_fork_move(work, q1);
    return {gate, work.freeze()};
}

TreeRewrite straighten_fork(const TernaryTree &tree, QubitId q1) {
    Straightener s(tree, false);
    s.straighten_fork(q1);
    return {std::move(s.circuit()), s.tree().freeze()};
}

Circuit permutation_swaps(std::size_t num_qubits, std::span<const QubitId> destination) {
    if (destination.size() != num_qubits) {
        throw SizeError("destination map length does not match the qubit count");
    }
    // source_of[p]: content that must end up on qubit p.
    std::vector<QubitId> source_of(num_qubits + 1, 0);
    for (std::size_t q = 1; q <= num_qubits; ++q) {
        QubitId d = destination[q - 1];
        if (d == 0 || d > num_qubits || source_of[d] != 0) {
            throw std::invalid_argument("destination map is not a permutation");
        }
        source_of[d] = static_cast<QubitId>(q);
    }
    std::vector<QubitId> where(num_qubits + 1);
    std::vector<QubitId> content(num_qubits + 1);
    for (QubitId q = 1; q <= num_qubits; ++q) {
        where[q] = q;
        content[q] = q;
    }
    Circuit swaps(num_qubits);
    for (QubitId p = 1; p <= num_qubits; ++p) {
        QubitId src = source_of[p];
        QubitId cur = where[src];
        if (cur == p) {
            continue;
        }
        swaps.append(CliffordGate::pair(GateKind::SWAP, p, cur));
        QubitId displaced = content[p];
        content[cur] = displaced;
        where[displaced] = cur;
        content[p] = src;
        where[src] = p;
    }
    return swaps;
}

StraightenResult straighten(const TernaryTree &tree, const StraightenOptions &options) {
    const std::size_t m = tree.num_qubits();
    Straightener s(tree, options.verify_steps);
    std::size_t resolutions = 0;
    for (QubitId q = s.next_fork(); q != 0; q = s.next_fork()) {
        s.straighten_fork(q);
        ++resolutions;
    }
    std::vector<QubitId> order = s.align_chain();

    StraightenResult result{std::move(s.circuit()), std::move(order), {}, {}, {}, resolutions};
    if (options.materialize_swaps) {
        std::vector<QubitId> destination(m);
        for (std::size_t i = 0; i < m; ++i) {
            destination[result.permutation[i] - 1] = static_cast<QubitId>(i + 1);
        }
        result.circuit.append(permutation_swaps(m, destination));
        for (std::size_t i = 0; i < m; ++i) {
            result.permutation[i] = static_cast<QubitId>(i + 1);
        }
    }

    result.signs.assign(2 * m + 1, 0);
    result.jw_rank.assign(2 * m + 1, 0);
    auto products = leaf_products(tree);
    for (std::size_t j = 0; j < products.size(); ++j) {
        conjugate_in_place(result.circuit, products[j]);
        auto match = match_jw_generator(to_chain_frame(products[j], result.permutation));
        if (!match || result.signs[match->first] != 0) {
            throw InternalError("straightened generator " + std::to_string(j + 1) + " is not a distinct JW generator");
        }
        result.jw_rank[j] = match->first;
        result.signs[match->first] = match->second;
    }
    return result;
}

StraightenResult fix_signs(StraightenResult result) {
    const std::size_t m = result.permutation.size();
    if (result.signs.size() != 2 * m + 1) {
        throw SizeError("sign vector must have 2m+1 entries");
    }
    std::vector<std::size_t> flipped;
    for (std::size_t k = 0; k < 2 * m; ++k) {
        if (result.signs[k] < 0) {
            flipped.push_back(k);
        }
    }
    if (flipped.empty()) {
        return result;
    }
    // Conjugating by a product of JW generators over a set S flips exactly the ranks in S when
    // |S| is even, and exactly the ranks outside S (within 0..2m-1) when |S| is odd.
    const bool even = flipped.size() % 2 == 0;
    PauliString correction = PauliString::identity(m);
    std::size_t next = 0;
    for (std::size_t k = 0; k < 2 * m; ++k) {
        bool in_flipped = next < flipped.size() && flipped[next] == k;
        next += in_flipped;
        if (in_flipped == even) {
            correction *= jw_generator(m, k);
        }
    }
    PauliString physical = from_chain_frame(correction, result.permutation);
    for (QubitId q = 1; q <= m; ++q) {
        GateKind kind = GateKind::Z;
        switch (physical.letter(q)) {
            case PauliLetter::I:
                continue;
            case PauliLetter::X:
                kind = GateKind::X;
                break;
            case PauliLetter::Y:
                kind = GateKind::Y;
                break;
            case PauliLetter::Z:
                break;
        }
        auto gate = CliffordGate::single(kind, q);
        result.circuit.append(gate);
        result.signfix.push_back(gate);
    }
    for (std::size_t k = 0; k <= 2 * m; ++k) {
        if (!commutes(correction, jw_generator(m, k))) {
            result.signs[k] = -result.signs[k];
        }
    }
    return result;
}

std::string format_certificate(const StraightenResult &result) {
    std::string out = format_circuit(result.circuit);
    out += format_permutation(result.permutation);
    out += '\n';
    out += format_signs(result.signs);
    out += '\n';
    return out;
}

MappingResult map_between(const TernaryTree &a, const TernaryTree &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw SizeError(
            "cannot map a " + std::to_string(a.num_qubits()) + "-qubit tree onto a " +
            std::to_string(b.num_qubits()) + "-qubit tree");
    }
    const std::size_t m = a.num_qubits();
    StraightenResult ra = straighten(a);
    StraightenResult rb = straighten(b);

    MappingResult result{ra.circuit, {}, {}};
    if (ra.permutation != rb.permutation) {
        std::vector<QubitId> destination(m);
        for (std::size_t i = 0; i < m; ++i) {
            destination[ra.permutation[i] - 1] = rb.permutation[i];
        }
        result.circuit.append(permutation_swaps(m, destination));
    }
    result.circuit.append(inverse(rb.circuit));

    std::vector<std::size_t> b_leaf_of_rank(2 * m + 1);
    for (std::size_t k = 0; k < rb.jw_rank.size(); ++k) {
        b_leaf_of_rank[rb.jw_rank[k]] = k;
    }
    result.target_leaf.resize(2 * m + 1);
    result.signs.resize(2 * m + 1);
    for (std::size_t j = 0; j < ra.jw_rank.size(); ++j) {
        std::size_t r = ra.jw_rank[j];
        result.target_leaf[j] = b_leaf_of_rank[r];
        result.signs[j] = ra.signs[r] * rb.signs[r];
    }
    return result;
}

bool CertificateReport::ok() const {
    return bijective && failures() == 0;
}

std::size_t CertificateReport::failures() const {
    return static_cast<std::size_t>(std::count_if(ranks.begin(), ranks.end(), [](const RankCheck &r) { return !r.ok; }));
}

CertificateReport check_certificate(
    const TernaryTree &tree,
    const Circuit &circuit,
    std::span<const QubitId> permutation,
    std::span<const int> signs,
    std::span<const std::size_t> expected_jw_rank) {
    const std::size_t m = tree.num_qubits();
    if (permutation.size() != m) {
        throw SizeError("PERM has " + std::to_string(permutation.size()) + " entries, tree has " +
                        std::to_string(m) + " qubits");
    }
    if (!signs.empty() && signs.size() != 2 * m + 1) {
        throw SizeError("SIGNS has " + std::to_string(signs.size()) + " entries, expected " +
                        std::to_string(2 * m + 1));
    }
    if (circuit.num_qubits() > m) {
        throw SizeError("circuit acts on more qubits than the tree has");
    }
    CertificateReport report;
    std::vector<bool> seen(2 * m + 1, false);
    report.bijective = true;
    auto products = leaf_products(tree);
    for (std::size_t j = 0; j < products.size(); ++j) {
        RankCheck check{j, std::nullopt, 0, false};
        conjugate_in_place(circuit, products[j]);
        if (auto match = match_jw_generator(to_chain_frame(products[j], permutation))) {
            check.jw_rank = match->first;
            check.sign = match->second;
            check.ok = (signs.empty() || signs[match->first] == match->second) &&
                       (expected_jw_rank.empty() || expected_jw_rank[j] == match->first);
            if (seen[match->first]) {
                report.bijective = false;
            }
            seen[match->first] = true;
        } else {
            report.bijective = false;
        }
        report.ranks.push_back(check);
    }
    return report;
}

}  // namespace tern2jw
