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

#include "tern2jw/pauli.h"

#include <algorithm>
#include <cctype>

#include "tern2jw/errors.h"

namespace tern2jw {

char letter_char(PauliLetter letter) {
    return "IXYZ"[static_cast<int>(letter)];
}

std::optional<PauliLetter> letter_from_char(char c) {
    switch (c) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            return std::nullopt;
    }
}

std::string_view Phase::prefix() const {
    static constexpr std::string_view kPrefixes[] = {"+", "+i", "-", "-i"};
    return kPrefixes[exponent_];
}

std::pair<PauliLetter, Phase> multiply_letters(PauliLetter a, PauliLetter b) {
    auto product = static_cast<PauliLetter>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
    if (a == PauliLetter::I || b == PauliLetter::I || a == b) {
        return {product, Phase::one()};
    }
    // X -> Y -> Z -> X is the positive cycle: XY = iZ, YZ = iX, ZX = iY.
    int step = (static_cast<int>(b) - static_cast<int>(a) + 3) % 3;
    return {product, step == 1 ? Phase::i() : Phase::minus_i()};
}

PauliString::PauliString(std::vector<PauliLetter> letters, Phase phase)
    : letters_(std::move(letters)), phase_(phase) {
    if (letters_.empty()) {
        throw SizeError("a Pauli string needs at least one qubit");
    }
}

PauliString PauliString::identity(std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw SizeError("a Pauli string needs at least one qubit");
    }
    return PauliString(std::vector<PauliLetter>(num_qubits, PauliLetter::I));
}

PauliString PauliString::single(std::size_t num_qubits, QubitId q, PauliLetter letter) {
    PauliString result = identity(num_qubits);
    result.set_letter(q, letter);
    return result;
}

PauliString PauliString::parse(std::string_view text, std::optional<std::size_t> expected_qubits) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }

    Phase phase;
    std::size_t pos = begin;
    if (pos < end && (text[pos] == '+' || text[pos] == '-')) {
        bool negative = text[pos] == '-';
        ++pos;
        bool imaginary = pos < end && text[pos] == 'i';
        if (imaginary) {
            ++pos;
        }
        phase = Phase((negative ? 2 : 0) + (imaginary ? 1 : 0));
    }
    if (pos == end) {
        throw ParseError("expected at least one Pauli letter", 0, pos + 1);
    }

    std::vector<PauliLetter> letters;
    letters.reserve(end - pos);
    for (; pos < end; ++pos) {
        auto letter = letter_from_char(text[pos]);
        if (!letter) {
            throw ParseError(std::string("unexpected character '") + text[pos] + "' in Pauli string", 0, pos + 1);
        }
        letters.push_back(*letter);
    }
    if (expected_qubits && letters.size() != *expected_qubits) {
        throw ParseError(
            "expected " + std::to_string(*expected_qubits) + " Pauli letters, got " + std::to_string(letters.size()),
            0,
            end + 1);
    }
    return PauliString(std::move(letters), phase);
}

PauliLetter PauliString::letter(QubitId q) const {
    if (q == 0 || q > letters_.size()) {
        throw IndexError("qubit " + std::to_string(q) + " outside 1.." + std::to_string(letters_.size()));
    }
    return letters_[q - 1];
}

void PauliString::set_letter(QubitId q, PauliLetter letter) {
    if (q == 0 || q > letters_.size()) {
        throw IndexError("qubit " + std::to_string(q) + " outside 1.." + std::to_string(letters_.size()));
    }
    letters_[q - 1] = letter;
}

bool PauliString::is_identity_up_to_phase() const {
    return std::all_of(letters_.begin(), letters_.end(), [](PauliLetter l) { return l == PauliLetter::I; });
}

std::size_t PauliString::weight() const {
    return letters_.size() -
           static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), PauliLetter::I));
}

std::string PauliString::str() const {
    std::string result(phase_.prefix());
    result.reserve(result.size() + letters_.size());
    for (PauliLetter l : letters_) {
        result.push_back(letter_char(l));
    }
    return result;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw SizeError(
            "cannot multiply Pauli strings on " + std::to_string(num_qubits()) + " and " +
            std::to_string(rhs.num_qubits()) + " qubits");
    }
    phase_ *= rhs.phase_;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        auto [letter, phase] = multiply_letters(letters_[k], rhs.letters_[k]);
        letters_[k] = letter;
        phase_ *= phase;
    }
    return *this;
}

PauliString operator*(const PauliString &lhs, const PauliString &rhs) {
    PauliString result = lhs;
    result *= rhs;
    return result;
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw SizeError("cannot compare Pauli strings of different sizes");
    }
    auto la = a.letters();
    auto lb = b.letters();
    std::size_t clashes = 0;
    for (std::size_t k = 0; k < la.size(); ++k) {
        clashes += la[k] != PauliLetter::I && lb[k] != PauliLetter::I && la[k] != lb[k];
    }
    return clashes % 2 == 0;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

std::ostream &operator<<(std::ostream &out, Phase p) {
    return out << p.prefix();
}

}  // namespace tern2jw
