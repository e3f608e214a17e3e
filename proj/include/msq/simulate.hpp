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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "msq/circuit.hpp"
#include "msq/counts.hpp"
#include "msq/gates.hpp"
#include "msq/noise.hpp"
#include "msq/rng.hpp"
#include "msq/state.hpp"

namespace msq {

inline void apply_gate(QuantumState &state, const Gate &gate) {
    switch (gate.kind) {
        case GateKind::X:
            state.apply_x(gate.q0);
            break;
        case GateKind::CNOT:
            state.apply_cnot(gate.q0, gate.q1);
            break;
        case GateKind::Unitary2Q:
            state.apply_2q(gate_matrix_2q(gate), gate.q0, gate.q1);
            break;
        default:
            state.apply_1q(gate_matrix_1q(gate), gate.q0);
            break;
    }
}

/// One trajectory of `circuit` on a copy of `input`: gates with per-gate
/// noise, then z measurements in declaration order with classical readout
/// flips. Returns the classical bits keyed by cbit index.
inline std::vector<int> run_single_shot(const Circuit &circuit, const QuantumState &input,
                                        const NoiseModel &model, Rng &rng,
                                        QuantumState *final_state = nullptr) {
    if (input.n_qubits() != circuit.n_qubits) {
        throw std::invalid_argument("run_single_shot: state/circuit qubit count mismatch");
    }
    QuantumState state = input;
    for (const Gate &g : circuit.gates) {
        apply_gate(state, g);
        apply_noise_trajectory(state, g, model, rng);
    }
    std::vector<int> bits(static_cast<std::size_t>(circuit.n_cbits()), 0);
    for (const MeasuredQubit &m : circuit.measured) {
        const int outcome = state.measure_z(m.qubit, rng);
        int bit = outcome == +1 ? 0 : 1;
        if (rng.bernoulli(model.readout_flip)) {
            bit ^= 1;
        }
        bits[static_cast<std::size_t>(m.cbit)] = bit;
    }
    if (final_state != nullptr) {
        *final_state = state;
    }
    return bits;
}

inline std::string bits_to_key(const std::vector<int> &bits) {
    std::string key(bits.size(), '0');
    for (std::size_t c = 0; c < bits.size(); ++c) {
        key[bits.size() - 1 - c] = bits[c] ? '1' : '0';  // cbit 0 rightmost
    }
    return key;
}

/// Repeated sampling. Shot k draws from Rng::stream(seed, k), so the result
/// is independent of shot execution order and reproducible from the seed.
inline Counts run_shots(const Circuit &circuit, const QuantumState &input, const NoiseModel &model,
                        std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("run_shots: shots must be >= 1");
    }
    model.validate();
    Counts counts;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng = Rng::stream(seed, shot);
        counts.record(bits_to_key(run_single_shot(circuit, input, model, rng)));
    }
    return counts;
}

/// <psi|A|psi> for a dense Hermitian matrix (row-major, dim x dim).
inline double expectation(const QuantumState &state, const std::vector<cdouble> &observable) {
    const std::size_t dim = state.dim();
    if (observable.size() != dim * dim) {
        throw std::invalid_argument("expectation: observable dimension mismatch");
    }
    double herm_defect = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            herm_defect = std::max(
                herm_defect, std::abs(observable[r * dim + c] - std::conj(observable[c * dim + r])));
        }
    }
    if (herm_defect >= 1e-12) {
        throw std::invalid_argument("expectation: observable is not Hermitian to 1e-12");
    }
    cdouble acc = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        cdouble row = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            row += observable[r * dim + c] * state.amplitude(c);
        }
        acc += std::conj(state.amplitude(r)) * row;
    }
    if (std::abs(acc.imag()) >= 1e-10) {
        throw std::logic_error("expectation: non-real value " + std::to_string(acc.imag()));
    }
    return acc.real();
}

/// <sigma_z> of one qubit: P(bit 0) - P(bit 1).
inline double expectation_z(const QuantumState &state, int qubit) {
    return 2.0 * state.probability_of_bit(qubit, 0) - 1.0;
}

}  // namespace msq
