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

#include <cctype>
#include <limits>
#include <random>
#include <unordered_map>
#include <algorithm>

#include "tern2jw/errors.h"

namespace tern2jw {
namespace {

std::size_t slot(Label label) {
    return static_cast<std::size_t>(label);
}

class TreeParser {
  public:
    explicit TreeParser(std::string_view text) : text_(text) {
    }

    TernaryTree parse() {
        skip_space();
        if (peek() == '_') {
            fail("a tree needs at least one qubit node", pos_);
        }
        QubitId root = open_node();
        std::vector<Frame> stack{{root, 0}};

        while (!stack.empty()) {
            skip_space();
            char c = peek();
            if (c == ')') {
                ++pos_;
                stack.pop_back();
                continue;
            }
            if (c != ':') {
                fail(c == '\0' ? "unexpected end of input, expected ')'" : std::string("unexpected '") + c + "'",
                     pos_);
            }
            std::size_t label_pos = pos_;
            ++pos_;
            skip_space();
            Label label;
            switch (peek()) {
                case 'x':
                    label = Label::X;
                    break;
                case 'y':
                    label = Label::Y;
                    break;
                case 'z':
                    label = Label::Z;
                    break;
                default:
                    fail("expected link label x, y or z after ':'", pos_);
            }
            ++pos_;
            Frame &frame = stack.back();
            if (slot(label) < frame.next_slot) {
                fail("link labels must appear at most once, in x, y, z order", label_pos);
            }
            frame.next_slot = slot(label) + 1;
            QubitId parent = frame.qubit;

            skip_space();
            if (peek() == '_') {
                ++pos_;
                continue;
            }
            QubitId child = open_node();
            children_[index_of_.at(parent)][slot(label)] = child;
            stack.push_back({child, 0});
        }

        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing characters after tree", pos_);
        }
        const std::size_t m = children_.size();
        for (std::size_t k = 0; k < ids_.size(); ++k) {
            if (ids_[k] > m) {
                fail("qubit ids must be exactly 1.." + std::to_string(m) + ", found q" + std::to_string(ids_[k]),
                     id_positions_[k]);
            }
        }
        std::vector<ChildSlots> ordered(m);
        for (std::size_t k = 0; k < ids_.size(); ++k) {
            ordered[ids_[k] - 1] = children_[k];
        }
        return TernaryTree(root, std::move(ordered));
    }

  private:
    struct Frame {
        QubitId qubit;
        std::size_t next_slot;
    };

    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string &message, std::size_t offset) const {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

    // Consumes "(" "q" INT and registers the node; returns its id.
    QubitId open_node() {
        skip_space();
        if (peek() != '(') {
            fail("expected '(' or '_'", pos_);
        }
        ++pos_;
        skip_space();
        if (peek() != 'q') {
            fail("expected 'q' followed by a qubit id", pos_);
        }
        ++pos_;
        skip_space();
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > std::numeric_limits<QubitId>::max()) {
                fail("qubit id too large", start);
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a qubit id after 'q'", start);
        }
        if (value == 0) {
            fail("qubit ids start at 1", start);
        }
        auto id = static_cast<QubitId>(value);
        if (!index_of_.emplace(id, children_.size()).second) {
            fail("duplicate qubit id q" + std::to_string(id), start);
        }
        ids_.push_back(id);
        id_positions_.push_back(start);
        children_.push_back({0, 0, 0});
        return id;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    // Nodes in parse order; index_of_ maps an id to its parse index.
    std::vector<QubitId> ids_;
    std::vector<std::size_t> id_positions_;
    std::unordered_map<QubitId, std::size_t> index_of_;
    std::vector<ChildSlots> children_;
};

void emit_tree(const TernaryTree &tree, bool explicit_terminals, std::string &out) {
    struct Frame {
        QubitId qubit;
        std::size_t next_slot;
    };
    std::vector<Frame> stack{{tree.root(), 0}};
    out += "(q" + std::to_string(tree.root());
    while (!stack.empty()) {
        Frame &frame = stack.back();
        if (frame.next_slot == 3) {
            out += ')';
            stack.pop_back();
            continue;
        }
        auto label = static_cast<Label>(frame.next_slot++);
        QubitId child = tree.child(frame.qubit, label);
        if (child == 0) {
            if (explicit_terminals) {
                out += " :";
                out += label_char(label);
                out += " _";
            }
            continue;
        }
        out += " :";
        out += label_char(label);
        out += " (q" + std::to_string(child);
        stack.push_back({child, 0});
    }
}

}  // namespace

char label_char(Label label) {
    return "xyz"[slot(label)];
}

TernaryTree::TernaryTree(QubitId root, std::vector<ChildSlots> children)
    : root_(root), children_(std::move(children)), parents_(children_.size(), 0) {
    const std::size_t m = children_.size();
    if (m == 0) {
        throw SizeError("a tree needs at least one qubit node");
    }
    if (m > std::numeric_limits<QubitId>::max()) {
        throw SizeError("too many qubit nodes");
    }
    if (root == 0 || root > m) {
        throw IndexError("root q" + std::to_string(root) + " outside 1.." + std::to_string(m));
    }
    for (std::size_t q = 1; q <= m; ++q) {
        for (QubitId c : children_[q - 1]) {
            if (c == 0) {
                continue;
            }
            if (c > m) {
                throw IndexError("child q" + std::to_string(c) + " outside 1.." + std::to_string(m));
            }
            if (c == root || parents_[c - 1] != 0) {
                throw StructureError("qubit q" + std::to_string(c) + " has more than one parent");
            }
            parents_[c - 1] = static_cast<QubitId>(q);
        }
    }
    // Every non-root node has exactly one parent; reachability from the root rules out cycles.
    std::size_t reached = 0;
    std::vector<QubitId> todo{root};
    while (!todo.empty()) {
        QubitId q = todo.back();
        todo.pop_back();
        ++reached;
        for (QubitId c : children_[q - 1]) {
            if (c != 0) {
                todo.push_back(c);
            }
        }
    }
    if (reached != m) {
        throw StructureError("tree has qubit nodes unreachable from the root");
    }
}

const ChildSlots &TernaryTree::children(QubitId q) const {
    if (q == 0 || q > children_.size()) {
        throw IndexError("unknown qubit q" + std::to_string(q));
    }
    return children_[q - 1];
}

QubitId TernaryTree::parent(QubitId q) const {
    children(q);
    return parents_[q - 1];
}

std::size_t TernaryTree::non_terminal_children(QubitId q) const {
    std::size_t n = 0;
    for (QubitId c : children(q)) {
        n += c != 0;
    }
    return n;
}

bool TernaryTree::is_fork(QubitId q) const {
    return non_terminal_children(q) >= 2;
}

std::size_t TernaryTree::terminal_count() const {
    std::size_t n = 0;
    for (const auto &slots : children_) {
        for (QubitId c : slots) {
            n += c == 0;
        }
    }
    return n;
}

bool TernaryTree::is_chain() const {
    for (std::size_t q = 1; q <= children_.size(); ++q) {
        if (is_fork(static_cast<QubitId>(q))) {
            return false;
        }
    }
    return true;
}

std::string TernaryTree::str() const {
    std::string out;
    emit_tree(*this, true, out);
    return out;
}

std::string TernaryTree::compact_str() const {
    std::string out;
    emit_tree(*this, false, out);
    return out;
}

TernaryTree parse_tree(std::string_view text) {
    return TreeParser(text).parse();
}

TernaryTree augment(QubitId root, std::span<const TreeEdge> edges) {
    QubitId m = root;
    for (const auto &e : edges) {
        m = std::max({m, e.parent, e.child});
    }
    std::vector<ChildSlots> children(m, ChildSlots{0, 0, 0});
    for (const auto &e : edges) {
        if (e.parent == 0 || e.child == 0) {
            throw IndexError("qubit ids start at 1");
        }
        QubitId &slot_ref = children[e.parent - 1][slot(e.label)];
        if (slot_ref != 0) {
            throw StructureError(
                "slot " + std::string(1, label_char(e.label)) + " of q" + std::to_string(e.parent) +
                " assigned twice");
        }
        slot_ref = e.child;
    }
    return TernaryTree(root, std::move(children));
}

std::vector<LeafPath> leaves(const TernaryTree &tree) {
    std::vector<LeafPath> result;
    result.reserve(tree.terminal_count());
    struct Frame {
        QubitId qubit;
        std::size_t next_slot;
    };
    std::vector<Frame> stack{{tree.root(), 0}};
    LeafPath path;
    while (!stack.empty()) {
        Frame &frame = stack.back();
        if (frame.next_slot == 3) {
            stack.pop_back();
            if (!path.empty()) {
                path.pop_back();
            }
            continue;
        }
        auto label = static_cast<Label>(frame.next_slot++);
        path.push_back({frame.qubit, label});
        QubitId child = tree.child(frame.qubit, label);
        if (child == 0) {
            result.push_back(path);
            path.pop_back();
        } else {
            stack.push_back({child, 0});
        }
    }
    return result;
}

PauliString path_product(const TernaryTree &tree, const LeafPath &path) {
    if (path.empty()) {
        throw StructureError("a leaf path has at least one step");
    }
    PauliString product = PauliString::identity(tree.num_qubits());
    QubitId expected = tree.root();
    for (std::size_t k = 0; k < path.size(); ++k) {
        const PathStep &step = path[k];
        if (step.qubit != expected) {
            throw StructureError(
                "path step " + std::to_string(k + 1) + " visits q" + std::to_string(step.qubit) + ", expected q" +
                std::to_string(expected));
        }
        product.set_letter(step.qubit, letter_of(step.label));
        expected = tree.child(step.qubit, step.label);
        bool last = k + 1 == path.size();
        if (last != (expected == 0)) {
            throw StructureError(
                last ? "path ends before reaching a terminal" : "path continues past a terminal");
        }
    }
    return product;
}

std::vector<PauliString> leaf_products(const TernaryTree &tree) {
    std::vector<PauliString> result;
    result.reserve(tree.terminal_count());
    struct Frame {
        QubitId qubit;
        std::size_t next_slot;
    };
    std::vector<Frame> stack{{tree.root(), 0}};
    PauliString current = PauliString::identity(tree.num_qubits());
    while (!stack.empty()) {
        Frame &frame = stack.back();
        if (frame.next_slot == 3) {
            current.set_letter(frame.qubit, PauliLetter::I);
            stack.pop_back();
            continue;
        }
        auto label = static_cast<Label>(frame.next_slot++);
        current.set_letter(frame.qubit, letter_of(label));
        QubitId child = tree.child(frame.qubit, label);
        if (child == 0) {
            result.push_back(current);
        } else {
            stack.push_back({child, 0});
        }
    }
    return result;
}

std::vector<PauliString> GeneratorSet::products() const {
    std::vector<PauliString> result;
    result.reserve(entries.size());
    for (const auto &e : entries) {
        result.push_back(e.product);
    }
    return result;
}

GeneratorSet generators(const TernaryTree &tree) {
    GeneratorSet set{tree.num_qubits(), {}};
    auto paths = leaves(tree);
    auto products = leaf_products(tree);
    set.entries.reserve(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
        set.entries.push_back({std::move(paths[k]), std::move(products[k])});
    }
    ValidationReport report = check_generator_set(set);
    if (!report.anticommuting || !report.unit_squares) {
        throw InternalError("tree generators failed the anticommutation check");
    }
    return set;
}

ValidationReport check_generator_set(std::span<const PauliString> generators) {
    ValidationReport report;
    for (std::size_t j = 0; j < generators.size() && report.anticommuting; ++j) {
        for (std::size_t k = j + 1; k < generators.size(); ++k) {
            if (commutes(generators[j], generators[k])) {
                report.anticommuting = false;
                report.commuting_pair = {j, k};
                break;
            }
        }
    }
    for (std::size_t j = 0; j < generators.size(); ++j) {
        PauliString square = generators[j] * generators[j];
        if (!square.is_identity_up_to_phase() || square.phase() != Phase::one()) {
            report.unit_squares = false;
            report.bad_square = j;
            break;
        }
    }
    if (!generators.empty()) {
        PauliString total = generators.front();
        for (std::size_t j = 1; j < generators.size(); ++j) {
            total *= generators[j];
        }
        report.complete = total.is_identity_up_to_phase();
        report.total_product = std::move(total);
    }
    return report;
}

ValidationReport check_generator_set(const GeneratorSet &set) {
    auto products = set.products();
    return check_generator_set(products);
}

TernaryTree jw_chain(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw SizeError("a chain needs at least one qubit");
    }
    if (num_qubits > std::numeric_limits<QubitId>::max()) {
        throw SizeError("too many qubits");
    }
    std::vector<ChildSlots> children(num_qubits, ChildSlots{0, 0, 0});
    for (std::size_t k = 1; k < num_qubits; ++k) {
        children[k - 1][slot(Label::Z)] = static_cast<QubitId>(k + 1);
    }
    return TernaryTree(1, std::move(children));
}

TernaryTree full_ternary(unsigned depth) {
    std::uint64_t total = 1;
    std::uint64_t level = 1;
    for (unsigned d = 0; d < depth; ++d) {
        level *= 3;
        total += level;
        if (total > std::numeric_limits<QubitId>::max()) {
            throw SizeError("full ternary tree of depth " + std::to_string(depth) + " overflows the qubit id width");
        }
    }
    std::vector<ChildSlots> children(total, ChildSlots{0, 0, 0});
    for (std::uint64_t n = 1; n <= total; ++n) {
        for (std::size_t s = 0; s < 3; ++s) {
            std::uint64_t c = 3 * (n - 1) + 2 + s;
            if (c <= total) {
                children[n - 1][s] = static_cast<QubitId>(c);
            }
        }
    }
    return TernaryTree(1, std::move(children));
}

TernaryTree random_tree(std::size_t num_qubits, std::uint64_t seed) {
    if (num_qubits == 0) {
        throw SizeError("a tree needs at least one qubit node");
    }
    if (num_qubits > std::numeric_limits<QubitId>::max()) {
        throw SizeError("too many qubits");
    }
    std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed ^ (seed >> 32)));
    std::vector<ChildSlots> children(num_qubits, ChildSlots{0, 0, 0});
    std::vector<std::pair<QubitId, std::size_t>> free_slots{{1, 0}, {1, 1}, {1, 2}};
    for (std::size_t k = 2; k <= num_qubits; ++k) {
        std::size_t pick = rng() % free_slots.size();
        auto [parent, s] = free_slots[pick];
        free_slots[pick] = free_slots.back();
        free_slots.pop_back();
        auto id = static_cast<QubitId>(k);
        children[parent - 1][s] = id;
        for (std::size_t t = 0; t < 3; ++t) {
            free_slots.emplace_back(id, t);
        }
    }
    return TernaryTree(1, std::move(children));
}

PauliString jw_generator(std::size_t num_qubits, std::size_t rank) {
    if (rank > 2 * num_qubits) {
        throw IndexError("JW rank " + std::to_string(rank) + " outside 0.." + std::to_string(2 * num_qubits));
    }
    PauliString p = PauliString::identity(num_qubits);
    std::size_t zs = rank == 2 * num_qubits ? num_qubits : rank / 2;
    for (std::size_t k = 0; k < zs; ++k) {
        p.set_letter(static_cast<QubitId>(k + 1), PauliLetter::Z);
    }
    if (rank < 2 * num_qubits) {
        p.set_letter(static_cast<QubitId>(zs + 1), rank % 2 == 0 ? PauliLetter::X : PauliLetter::Y);
    }
    return p;
}

std::optional<std::pair<std::size_t, int>> match_jw_generator(const PauliString &p) {
    if (!p.is_hermitian()) {
        return std::nullopt;
    }
    int sign = p.phase() == Phase::one() ? 1 : -1;
    auto letters = p.letters();
    const std::size_t m = letters.size();
    std::size_t k = 0;
    while (k < m && letters[k] == PauliLetter::Z) {
        ++k;
    }
    if (k == m) {
        return std::pair{2 * m, sign};
    }
    if (letters[k] != PauliLetter::X && letters[k] != PauliLetter::Y) {
        return std::nullopt;
    }
    for (std::size_t j = k + 1; j < m; ++j) {
        if (letters[j] != PauliLetter::I) {
            return std::nullopt;
        }
    }
    return std::pair{2 * k + (letters[k] == PauliLetter::Y ? 1 : 0), sign};
}

PauliString to_chain_frame(const PauliString &p, std::span<const QubitId> permutation) {
    if (permutation.size() != p.num_qubits()) {
        throw SizeError("permutation length does not match the qubit count");
    }
    std::vector<PauliLetter> letters(p.num_qubits());
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        letters[i] = p.letter(permutation[i]);
    }
    return PauliString(std::move(letters), p.phase());
}

PauliString from_chain_frame(const PauliString &p, std::span<const QubitId> permutation) {
    if (permutation.size() != p.num_qubits()) {
        throw SizeError("permutation length does not match the qubit count");
    }
    PauliString result = PauliString::identity(p.num_qubits());
    result.set_phase(p.phase());
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        result.set_letter(permutation[i], p.letters()[i]);
    }
    return result;
}

}  // namespace tern2jw
