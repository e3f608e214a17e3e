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

#include "msq/gates.hpp"

namespace msq {

struct MeasuredQubit {
    int qubit;
    int cbit;
};

/// Ordered gate list plus measured-qubit declaration.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    std::vector<MeasuredQubit> measured;

    explicit Circuit(int n) : n_qubits(n) {
        if (n < 1) {
            throw std::invalid_argument("Circuit: n_qubits must be positive");
        }
    }

    Circuit &add(const Gate &g) {
        validate_target(g.q0);
        if (g.is_two_qubit()) {
            validate_target(g.q1);
            if (g.q0 == g.q1) {
                throw std::invalid_argument("Circuit: gate targets must be distinct");
            }
        }
        gates.push_back(g);
        return *this;
    }

    Circuit &measure(int qubit, int cbit) {
        validate_target(qubit);
        if (cbit < 0) {
            throw std::invalid_argument("Circuit: classical bit must be non-negative");
        }
        for (const MeasuredQubit &m : measured) {
            if (m.cbit == cbit) {
                throw std::invalid_argument("Circuit: classical bit " + std::to_string(cbit) +
                                            " assigned twice");
            }
        }
        measured.push_back(MeasuredQubit{qubit, cbit});
        return *this;
    }

    int n_cbits() const {
        int n = 0;
        for (const MeasuredQubit &m : measured) {
            n = std::max(n, m.cbit + 1);
        }
        return n;
    }

    int gate_count() const { return static_cast<int>(gates.size()); }

    int two_qubit_gate_count() const {
        int n = 0;
        for (const Gate &g : gates) {
            n += g.is_two_qubit() ? 1 : 0;
        }
        return n;
    }

  private:
    void validate_target(int q) const {
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range("Circuit: qubit " + std::to_string(q) + " out of range");
        }
    }
};

}  // namespace msq
