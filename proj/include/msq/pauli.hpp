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

#include <stdexcept>
#include <string>
#include <vector>

#include "msq/matrix.hpp"

namespace msq {

enum class Pauli { I, X, Y, Z };

inline Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return kIdentity2;
        case Pauli::X:
            return Mat2{0.0, 1.0, 1.0, 0.0};
        case Pauli::Y:
            return Mat2{cdouble(0, 0), cdouble(0, -1), cdouble(0, 1), cdouble(0, 0)};
        case Pauli::Z:
            return Mat2{1.0, 0.0, 0.0, -1.0};
    }
    throw std::logic_error("pauli_matrix: bad enum");
}

inline char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

/// Signed tensor product of two single-qubit Paulis. The left factor acts on
/// qubit 0, the right factor on qubit 1. Eigenvalues are +1 and -1.
struct PauliObservable {
    Pauli left = Pauli::I;
    Pauli right = Pauli::I;
    int sign = +1;

    Mat4 matrix() const {
        Mat4 m = kron(pauli_matrix(right), pauli_matrix(left));
        if (sign < 0) {
            for (cdouble &e : m) {
                e = -e;
            }
        }
        return m;
    }

    std::vector<cdouble> matrix_vec() const {
        Mat4 m = matrix();
        return std::vector<cdouble>(m.begin(), m.end());
    }

    std::string name() const {
        std::string s;
        if (sign < 0) {
            s += '-';
        }
        s += pauli_char(left);
        s += 'x';
        s += pauli_char(right);
        return s;
    }

    bool operator==(const PauliObservable &other) const = default;
};

}  // namespace msq
