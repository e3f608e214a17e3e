// Copyright 2026 The msq Authors
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

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

namespace msq {

/// Six line products, +-1 entries, ordered (row1, row2, row3, col1, col2, col3).
using LineSigns = std::array<int, 6>;

/// A +-1 assignment to all nine cells of the square: the object a realistic
/// non-contextual theory says exists.
struct SignSquare {
    std::array<std::array<int, 3>, 3> cells;  // [row][col], values +-1

    LineSigns line_products() const {
        LineSigns p{};
        for (int i = 0; i < 3; ++i) {
            const auto r = static_cast<std::size_t>(i);
            p[r] = cells[r][0] * cells[r][1] * cells[r][2];
            p[r + 3] = cells[0][r] * cells[1][r] * cells[2][r];
        }
        return p;
    }
};

/// All 2^9 = 512 cell assignments with their result vectors. Bit k of the
/// enumeration index controls cell (k / 3, k % 3); a set bit means -1.
inline std::vector<std::pair<SignSquare, LineSigns>> enumerate_sign_squares() {
    std::vector<std::pair<SignSquare, LineSigns>> out;
    out.reserve(512);
    for (int mask = 0; mask < 512; ++mask) {
        SignSquare sq;
        for (int k = 0; k < 9; ++k) {
            sq.cells[static_cast<std::size_t>(k / 3)][static_cast<std::size_t>(k % 3)] =
                (mask >> k) & 1 ? -1 : +1;
        }
        out.emplace_back(sq, sq.line_products());
    }
    return out;
}

inline std::vector<LineSigns> distinct_result_vectors(
    const std::vector<std::pair<SignSquare, LineSigns>> &squares) {
    std::set<LineSigns> seen;
    for (const auto &[sq, v] : squares) {
        seen.insert(v);
    }
    return std::vector<LineSigns>(seen.begin(), seen.end());
}

/// The 64 possible result vectors split into the 32 reachable by sign
/// squares ("realism") and the 32 that are not ("quantum").
///
/// Construction: the three row products of a square with an even number of
/// -1 cells form an even-parity triple, those of an odd square an odd
/// triple, and the same holds for columns; concatenating two triples of
/// equal parity gives a realism vector, mixed parity a quantum one. Vector
/// order is the pair-enumeration order over the two triple lists below,
/// declared canonical for reproducibility.
struct VectorSets {
    std::vector<LineSigns> realism;
    std::vector<LineSigns> quantum;

    static const std::array<std::array<int, 3>, 4> &even_triples() {
        static const std::array<std::array<int, 3>, 4> kEven{{
            {+1, +1, +1},
            {+1, -1, -1},
            {-1, +1, -1},
            {-1, -1, +1},
        }};
        return kEven;
    }

    static const std::array<std::array<int, 3>, 4> &odd_triples() {
        static const std::array<std::array<int, 3>, 4> kOdd{{
            {-1, -1, -1},
            {-1, +1, +1},
            {+1, -1, +1},
            {+1, +1, -1},
        }};
        return kOdd;
    }

    static VectorSets build() {
        VectorSets sets;
        const auto &even = even_triples();
        const auto &odd = odd_triples();
        auto concat = [](const std::array<int, 3> &rows, const std::array<int, 3> &cols) {
            return LineSigns{rows[0], rows[1], rows[2], cols[0], cols[1], cols[2]};
        };
        for (const auto &a : even) {
            for (const auto &b : even) {
                sets.realism.push_back(concat(a, b));
            }
        }
        for (const auto &a : odd) {
            for (const auto &b : odd) {
                sets.realism.push_back(concat(a, b));
            }
        }
        for (const auto &a : even) {
            for (const auto &b : odd) {
                sets.quantum.push_back(concat(a, b));
            }
        }
        for (const auto &a : odd) {
            for (const auto &b : even) {
                sets.quantum.push_back(concat(a, b));
            }
        }
        return sets;
    }

    /// Cached singleton; the tables are immutable after construction.
    static const VectorSets &standard() {
        static const VectorSets kSets = build();
        return kSets;
    }
};

inline int dot(const LineSigns &a, const LineSigns &b) {
    int s = 0;
    for (int i = 0; i < 6; ++i) {
        s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    }
    return s;
}

/// The ideal quantum prediction (1,1,1,1,1,-1).
inline LineSigns ideal_quantum_vector() { return LineSigns{1, 1, 1, 1, 1, -1}; }

}  // namespace msq
