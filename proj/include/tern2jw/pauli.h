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
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tern2jw {

/// Qubit ids are 1-based throughout the public API; 0 never names a qubit.
using QubitId = std::uint32_t;

/// The encoding is chosen so that the letter part of a product is the xor of the operands.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter letter);
std::optional<PauliLetter> letter_from_char(char c);

/// A power of the imaginary unit, i^exponent with exponent in Z_4.
class Phase {
  public:
    constexpr Phase() = default;
    constexpr explicit Phase(int exponent) : exponent_(static_cast<std::uint8_t>(((exponent % 4) + 4) % 4)) {
    }

    static constexpr Phase one() {
        return Phase(0);
    }
    static constexpr Phase i() {
        return Phase(1);
    }
    static constexpr Phase minus_one() {
        return Phase(2);
    }
    static constexpr Phase minus_i() {
        return Phase(3);
    }

    constexpr std::uint8_t exponent() const {
        return exponent_;
    }
    /// True for +1 and -1.
    constexpr bool is_real() const {
        return (exponent_ & 1) == 0;
    }
    constexpr Phase operator*(Phase other) const {
        return Phase(exponent_ + other.exponent_);
    }
    constexpr Phase &operator*=(Phase other) {
        exponent_ = static_cast<std::uint8_t>((exponent_ + other.exponent_) & 3);
        return *this;
    }
    constexpr Phase negated() const {
        return Phase(exponent_ + 2);
    }
    constexpr bool operator==(const Phase &) const = default;

    /// "+", "+i", "-" or "-i".
    std::string_view prefix() const;

  private:
    std::uint8_t exponent_ = 0;
};

/// A phase times a tensor product of Pauli letters. Qubit 1 is the leftmost tensor factor.
class PauliString {
  public:
    PauliString(std::vector<PauliLetter> letters, Phase phase = Phase::one());

    /// All-I string with phase +1. Throws SizeError for zero qubits.
    static PauliString identity(std::size_t num_qubits);
    /// `letter` on qubit `q`, identity elsewhere.
    static PauliString single(std::size_t num_qubits, QubitId q, PauliLetter letter);
    /// Grammar: sign? letter+, sign in {+, -, +i, -i}, letter in {I, X, Y, Z}.
    /// When `expected_qubits` is given the letter count must match it.
    static PauliString parse(std::string_view text, std::optional<std::size_t> expected_qubits = std::nullopt);

    std::size_t num_qubits() const {
        return letters_.size();
    }
    PauliLetter letter(QubitId q) const;
    std::span<const PauliLetter> letters() const {
        return letters_;
    }
    Phase phase() const {
        return phase_;
    }
    bool is_hermitian() const {
        return phase_.is_real();
    }
    bool is_identity_up_to_phase() const;
    /// Number of non-identity letters.
    std::size_t weight() const;
    std::string str() const;

    void set_letter(QubitId q, PauliLetter letter);
    void set_phase(Phase phase) {
        phase_ = phase;
    }
    void negate() {
        phase_ = phase_.negated();
    }

    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &) const = default;

    /// Same letters, ignoring the phase.
    bool equal_up_to_phase(const PauliString &other) const {
        return letters_ == other.letters_;
    }

  private:
    std::vector<PauliLetter> letters_;
    Phase phase_;
};

PauliString operator*(const PauliString &lhs, const PauliString &rhs);

/// Phase-independent: true iff the strings differ on an even number of positions where both are non-I.
bool commutes(const PauliString &a, const PauliString &b);

/// Product of two letters as (letter, phase).
std::pair<PauliLetter, Phase> multiply_letters(PauliLetter a, PauliLetter b);

std::ostream &operator<<(std::ostream &out, const PauliString &p);
std::ostream &operator<<(std::ostream &out, Phase p);

}  // namespace tern2jw
