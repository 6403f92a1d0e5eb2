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
#include <vector>

#include "tern2jw/clifford.h"
#include "tern2jw/pauli.h"
#include "tern2jw/straighten.h"
#include "tern2jw/tree.h"

namespace tern2jw {

/// a + b i with integer parts.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool is_zero() const {
        return re == 0 && im == 0;
    }
    GaussInt conj() const {
        return {re, -im};
    }
    GaussInt operator+(GaussInt o) const {
        return {re + o.re, im + o.im};
    }
    GaussInt operator*(GaussInt o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt operator-() const {
        return {-re, -im};
    }
    bool operator==(const GaussInt &) const = default;
};

/// Dense square matrix over the Gaussian integers. No tolerances anywhere.
class ExactMatrix {
  public:
    explicit ExactMatrix(std::size_t dim);
    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    GaussInt &at(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    GaussInt at(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ExactMatrix operator*(const ExactMatrix &rhs) const;
    ExactMatrix adjoint() const;
    /// Divides out the integer gcd of all real and imaginary parts.
    void remove_content();

    bool operator==(const ExactMatrix &) const = default;

  private:
    std::size_t dim_;
    std::vector<GaussInt> entries_;
};

inline constexpr std::size_t kDefaultOracleCap = 8;

/// Kronecker product with qubit 1 as the leftmost (most significant) factor, times i^phase.
ExactMatrix dense_pauli(const PauliString &p, std::size_t cap = kDefaultOracleCap);

/// Gate matrix on `num_qubits` qubits. H is stored unnormalised as [[1, 1], [1, -1]].
ExactMatrix dense_gate(const CliffordGate &gate, std::size_t num_qubits, std::size_t cap = kDefaultOracleCap);

/// Product of the gate matrices in application order, up to a nonzero scalar.
ExactMatrix dense_circuit(const Circuit &circuit, std::size_t cap = kDefaultOracleCap);

/// The Pauli string P' with U M(P) = M(P') U, found by decoding U M(P) U^dagger and then
/// confirmed with the scale-free equation. Throws InternalError if no such string exists.
PauliString oracle_conjugate(const Circuit &circuit, const PauliString &p, std::size_t cap = kDefaultOracleCap);

/// Same as oracle_conjugate but reuses a precomputed circuit matrix.
PauliString oracle_conjugate(const ExactMatrix &unitary, const PauliString &p, std::size_t cap = kDefaultOracleCap);

struct OracleRankCheck {
    std::size_t leaf_rank = 0;
    std::optional<std::size_t> jw_rank;
    int sign = 0;
    bool ok = false;
};

struct OracleReport {
    std::vector<OracleRankCheck> ranks;

    bool ok() const;
    std::size_t failures() const;
};

/// For each leaf rank, the oracle image of the tree generator (renamed into chain positions) must
/// equal the recorded sign times the recorded JW generator. Empty `signs` / `jw_rank` in the
/// result mean "accept any sign" / "accept any distinct rank".
OracleReport oracle_check(const TernaryTree &tree, const StraightenResult &result, std::size_t cap = kDefaultOracleCap);

}  // namespace tern2jw
