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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "msq/matrix.hpp"

namespace msq {

enum class GateKind { H, X, U2, CNOT, Unitary1Q, Unitary2Q };

/// u2(phi, lambda) = (1/sqrt 2) [[1, -e^{i lambda}], [e^{i phi}, e^{i(phi+lambda)}]].
/// u2(0, pi) is the Hadamard; u2(0, pi/2) maps the sigma_y eigenbasis to z.
inline Mat2 u2_matrix(double phi, double lambda) {
    const double s = 1.0 / std::sqrt(2.0);
    const cdouble el = std::polar(1.0, lambda);
    const cdouble ep = std::polar(1.0, phi);
    return Mat2{s, -s * el, s * ep, s * ep * el};
}

inline constexpr Mat2 kPauliX{0.0, 1.0, 1.0, 0.0};
inline const Mat2 kHadamard{1.0 / 1.4142135623730951, 1.0 / 1.4142135623730951,
                            1.0 / 1.4142135623730951, -1.0 / 1.4142135623730951};

struct Gate {
    GateKind kind = GateKind::H;
    int q0 = -1;  // single-qubit target, or CNOT control, or low bit of a 2q unitary
    int q1 = -1;  // CNOT target, or high bit of a 2q unitary
    double phi = 0.0;
    double lambda = 0.0;
    std::vector<cdouble> matrix;  // only for Unitary1Q/Unitary2Q

    bool is_two_qubit() const {
        return kind == GateKind::CNOT || kind == GateKind::Unitary2Q;
    }

    static Gate h(int q) { return make(GateKind::H, q); }
    static Gate x(int q) { return make(GateKind::X, q); }

    static Gate u2(int q, double phi, double lambda) {
        Gate g = make(GateKind::U2, q);
        g.phi = phi;
        g.lambda = lambda;
        return g;
    }

    static Gate cnot(int control, int target) { return make(GateKind::CNOT, control, target); }

    static Gate unitary1q(int q, const Mat2 &u) {
        if (unitarity_defect(u) >= 1e-12) {
            throw std::invalid_argument("unitary1q: matrix is not unitary to 1e-12");
        }
        Gate g = make(GateKind::Unitary1Q, q);
        g.matrix.assign(u.begin(), u.end());
        return g;
    }

    static Gate unitary2q(int qa, int qb, const Mat4 &u) {
        if (unitarity_defect(u) >= 1e-12) {
            throw std::invalid_argument("unitary2q: matrix is not unitary to 1e-12");
        }
        Gate g = make(GateKind::Unitary2Q, qa, qb);
        g.matrix.assign(u.begin(), u.end());
        return g;
    }

  private:
    static Gate make(GateKind kind, int q0, int q1 = -1) {
        Gate g;
        g.kind = kind;
        g.q0 = q0;
        g.q1 = q1;
        return g;
    }
};

inline Mat2 gate_matrix_1q(const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            return kHadamard;
        case GateKind::X:
            return kPauliX;
        case GateKind::U2:
            return u2_matrix(g.phi, g.lambda);
        case GateKind::Unitary1Q: {
            Mat2 m;
            for (std::size_t i = 0; i < 4; ++i) {
                m[i] = g.matrix[i];
            }
            return m;
        }
        default:
            throw std::logic_error("gate_matrix_1q called on a two-qubit gate");
    }
}

inline Mat4 gate_matrix_2q(const Gate &g) {
    switch (g.kind) {
        case GateKind::CNOT: {
            // Subspace index (target_bit << 1) | control_bit.
            Mat4 m{};
            m[0 * 4 + 0] = 1.0;
            m[1 * 4 + 3] = 1.0;
            m[2 * 4 + 2] = 1.0;
            m[3 * 4 + 1] = 1.0;
            return m;
        }
        case GateKind::Unitary2Q: {
            Mat4 m;
            for (std::size_t i = 0; i < 16; ++i) {
                m[i] = g.matrix[i];
            }
            return m;
        }
        default:
            throw std::logic_error("gate_matrix_2q called on a single-qubit gate");
    }
}

inline std::string gate_name(const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            return "h(" + std::to_string(g.q0) + ")";
        case GateKind::X:
            return "x(" + std::to_string(g.q0) + ")";
        case GateKind::U2:
            return "u2(" + std::to_string(g.q0) + ")";
        case GateKind::CNOT:
            return "cnot(" + std::to_string(g.q0) + "," + std::to_string(g.q1) + ")";
        case GateKind::Unitary1Q:
            return "u1q(" + std::to_string(g.q0) + ")";
        case GateKind::Unitary2Q:
            return "u2q(" + std::to_string(g.q0) + "," + std::to_string(g.q1) + ")";
    }
    return "?";
}

}  // namespace msq
