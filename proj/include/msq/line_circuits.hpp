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
#include <numbers>

#include "msq/circuit.hpp"
#include "msq/magic_square.hpp"

namespace msq {

/// Three-qubit ancilla-parity circuits for the six lines of the square.
/// Qubits 0 and 1 carry the two-qubit system, qubit 2 is the ancilla that
/// accumulates the product of the line's three outcomes and is the only
/// qubit read out.
///
/// The gate sequences match the programs behind the bundled hardware counts
/// gate for gate; no gate-count optimization is applied even where
/// cancellations exist, since each line's noise behaviour depends on its
/// gate count.
inline Circuit build_line_circuit(const LineId &line) {
    check_line(line);
    constexpr double pi = std::numbers::pi;
    constexpr int anc = 2;
    Circuit c(3);
    const int ordinal = line_ordinal(line);
    switch (ordinal) {
        case 0:  // row 1: XxI, IxX, XxX
            c.add(Gate::h(0))
                .add(Gate::h(1))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc));
            break;
        case 1:  // row 2: IxY, YxI, YxY
            c.add(Gate::u2(0, 0, pi / 2))
                .add(Gate::u2(1, 0, pi / 2))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc));
            break;
        case 2:  // row 3: XxY, YxX, ZxZ (accumulated in the order ZxZ, XxY, YxX)
            c.add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::h(0))
                .add(Gate::u2(1, 0, pi / 2))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::u2(0, pi / 2, 3 * pi / 2))
                .add(Gate::u2(1, 3 * pi / 2, pi / 2))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc));
            break;
        case 3:  // col 1: XxI, IxY, XxY
            c.add(Gate::h(0))
                .add(Gate::u2(1, 0, pi / 2))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc));
            break;
        case 4:  // col 2: IxX, YxI, YxX
            c.add(Gate::u2(0, 0, pi / 2))
                .add(Gate::h(1))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc));
            break;
        case 5:  // col 3: XxX, YxY, ZxZ (accumulated in the order ZxZ, XxX, YxY)
            c.add(Gate::cnot(0, anc))
                .add(Gate::h(0))
                .add(Gate::cnot(1, anc))
                .add(Gate::h(1))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc))
                .add(Gate::u2(0, pi / 2, 3 * pi / 2))
                .add(Gate::u2(1, pi / 2, 3 * pi / 2))
                .add(Gate::cnot(0, anc))
                .add(Gate::cnot(1, anc));
            break;
    }
    c.measure(anc, 0);
    return c;
}

/// Ancilla circuit for a single square cell: rotate each non-trivial factor
/// into the z basis, XOR it onto the ancilla, read the ancilla.
inline Circuit build_observable_circuit(const PauliObservable &obs) {
    constexpr double pi = std::numbers::pi;
    constexpr int anc = 2;
    Circuit c(3);
    auto add_factor = [&](Pauli p, int qubit) {
        switch (p) {
            case Pauli::I:
                return false;
            case Pauli::X:
                c.add(Gate::h(qubit));
                return true;
            case Pauli::Y:
                c.add(Gate::u2(qubit, 0, pi / 2));
                return true;
            case Pauli::Z:
                return true;
        }
        return false;
    };
    const bool use_left = add_factor(obs.left, 0);
    const bool use_right = add_factor(obs.right, 1);
    if (use_left) {
        c.add(Gate::cnot(0, anc));
    }
    if (use_right) {
        c.add(Gate::cnot(1, anc));
    }
    if (obs.sign < 0) {
        c.add(Gate::x(anc));
    }
    c.measure(anc, 0);
    return c;
}

}  // namespace msq
