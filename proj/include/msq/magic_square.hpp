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

#include <array>
#include <stdexcept>
#include <string>

#include "msq/pauli.hpp"

namespace msq {

enum class LineKind { Row, Col };

/// One of the six measured lines. Index runs 1..3. The canonical ordering of
/// result-vector coefficients is rows 1-3 then columns 1-3.
struct LineId {
    LineKind kind;
    int index;

    static LineId row(int i) { return LineId{LineKind::Row, i}; }
    static LineId col(int i) { return LineId{LineKind::Col, i}; }

    bool operator==(const LineId &other) const = default;
};

inline void check_line(const LineId &line) {
    if (line.index < 1 || line.index > 3) {
        throw std::out_of_range("LineId: index must be 1..3");
    }
}

/// Position 0..5 in the canonical (row1..row3, col1..col3) ordering.
inline int line_ordinal(const LineId &line) {
    check_line(line);
    return (line.kind == LineKind::Row ? 0 : 3) + line.index - 1;
}

inline LineId line_from_ordinal(int ordinal) {
    if (ordinal < 0 || ordinal > 5) {
        throw std::out_of_range("line_from_ordinal: must be 0..5");
    }
    return ordinal < 3 ? LineId::row(ordinal + 1) : LineId::col(ordinal - 2);
}

inline std::string line_label(const LineId &line) {
    check_line(line);
    return (line.kind == LineKind::Row ? "row" : "col") + std::to_string(line.index);
}

inline LineId parse_line_label(const std::string &label) {
    if (label.size() == 4 && label[3] >= '1' && label[3] <= '3') {
        const std::string kind = label.substr(0, 3);
        if (kind == "row") {
            return LineId::row(label[3] - '0');
        }
        if (kind == "col") {
            return LineId::col(label[3] - '0');
        }
    }
    throw std::invalid_argument("not a line label: '" + label + "'");
}

inline std::string cell_label(int row, int col) {
    return "r" + std::to_string(row) + "c" + std::to_string(col);
}

inline std::pair<int, int> parse_cell_label(const std::string &label) {
    if (label.size() == 4 && label[0] == 'r' && label[2] == 'c' && label[1] >= '1' &&
        label[1] <= '3' && label[3] >= '1' && label[3] <= '3') {
        return {label[1] - '0', label[3] - '0'};
    }
    throw std::invalid_argument("not a cell label: '" + label + "'");
}

/// The 3x3 square of two-qubit Pauli observables together with the six
/// deterministic line products (+1 for every line except column 3).
///
///     X x I | I x X | X x X    +1
///     I x Y | Y x I | Y x Y    +1
///     X x Y | Y x X | Z x Z    +1
///       +1     +1      -1
struct MagicSquare {
    std::array<std::array<PauliObservable, 3>, 3> cells;

    static MagicSquare standard() {
        using enum Pauli;
        MagicSquare sq;
        sq.cells = {{
            {{{X, I}, {I, X}, {X, X}}},
            {{{I, Y}, {Y, I}, {Y, Y}}},
            {{{X, Y}, {Y, X}, {Z, Z}}},
        }};
        return sq;
    }

    const PauliObservable &at(int row, int col) const {
        if (row < 1 || row > 3 || col < 1 || col > 3) {
            throw std::out_of_range("MagicSquare: indices must be 1..3");
        }
        return cells[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    }

    PauliObservable &at_mutable(int row, int col) {
        return const_cast<PauliObservable &>(at(row, col));
    }

    std::array<PauliObservable, 3> line(const LineId &id) const {
        check_line(id);
        std::array<PauliObservable, 3> obs;
        for (int k = 0; k < 3; ++k) {
            obs[static_cast<std::size_t>(k)] = id.kind == LineKind::Row ? at(id.index, k + 1)
                                                                        : at(k + 1, id.index);
        }
        return obs;
    }

    /// Matrix product of the three observables along the line.
    Mat4 line_operator_product(const LineId &id) const {
        const auto obs = line(id);
        return matmul(matmul(obs[0].matrix(), obs[1].matrix()), obs[2].matrix());
    }
};

/// The quantum-mechanically predicted product of the three outcomes of a
/// line: +1 everywhere except column 3.
inline int line_product_sign(const LineId &line) {
    check_line(line);
    return (line.kind == LineKind::Col && line.index == 3) ? -1 : +1;
}

inline PauliObservable observable_at(int row, int col) {
    static const MagicSquare kSquare = MagicSquare::standard();
    return kSquare.at(row, col);
}

inline std::array<PauliObservable, 3> line_observables(const LineId &line) {
    static const MagicSquare kSquare = MagicSquare::standard();
    return kSquare.line(line);
}

}  // namespace msq
