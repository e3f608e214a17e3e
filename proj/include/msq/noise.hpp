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

#include "msq/gates.hpp"
#include "msq/rng.hpp"
#include "msq/state.hpp"

namespace msq {

/// Stochastic-trajectory noise channels, applied once after each gate.
/// Idle decoherence between gates is not modeled.
struct NoiseModel {
    double p1_depol = 0.0;      // per 1-qubit gate
    double p2_depol = 0.0;      // per 2-qubit gate, per touched qubit
    double gamma_ad = 0.0;      // amplitude damping per gate per touched qubit
    double readout_flip = 0.0;  // per-qubit classical bit flip at readout

    bool is_null() const {
        return p1_depol == 0.0 && p2_depol == 0.0 && gamma_ad == 0.0 && readout_flip == 0.0;
    }

    void validate() const {
        for (double p : {p1_depol, p2_depol, gamma_ad, readout_flip}) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument("NoiseModel: parameters must lie in [0, 1]");
            }
        }
    }

    static NoiseModel none() { return NoiseModel{}; }

    /// Illustrative preset with parameters near the middle of the error
    /// ranges quoted for the 5-qubit ibmqx4 device; not a calibration fit.
    static NoiseModel ibmqx4_like() { return NoiseModel{0.002, 0.05, 0.01, 0.05}; }
};

namespace detail {

inline void depolarize_qubit(QuantumState &state, int qubit, double p, Rng &rng) {
    if (!rng.bernoulli(p)) {
        return;
    }
    static const Mat2 kPauliY{cdouble(0, 0), cdouble(0, -1), cdouble(0, 1), cdouble(0, 0)};
    static const Mat2 kPauliZ{1.0, 0.0, 0.0, -1.0};
    switch (rng.uniform_int(3)) {
        case 0:
            state.apply_x(qubit);
            break;
        case 1:
            state.apply_1q(kPauliY, qubit);
            break;
        default:
            state.apply_1q(kPauliZ, qubit);
            break;
    }
}

// Two-outcome amplitude-damping trajectory: either the qubit decays to |0>
// (probability gamma * P(1)) or the no-decay Kraus back-action is applied.
// Both branches leave the state normalized.
inline void damp_qubit(QuantumState &state, int qubit, double gamma, Rng &rng) {
    if (gamma <= 0.0) {
        return;
    }
    const double p1 = state.probability_of_bit(qubit, 1);
    const double p_decay = gamma * p1;
    if (rng.uniform() < p_decay) {
        // K1 = sqrt(gamma) |0><1|: project onto |1>, flip to |0>, renormalize.
        state.collapse_bit(qubit, 1, p1);
        state.apply_x(qubit);
    } else {
        // K0 = diag(1, sqrt(1-gamma)), renormalized by the branch probability.
        const std::size_t qbit = std::size_t{1} << qubit;
        const double damp = std::sqrt(1.0 - gamma);
        const double scale = 1.0 / std::sqrt(std::max(1.0 - p_decay, 1e-300));
        auto &amps = state.mutable_amplitudes();
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] *= (i & qbit) ? damp * scale : scale;
        }
    }
}

}  // namespace detail

/// Apply the per-gate noise trajectory for `gate` to `state`: depolarizing
/// on each touched qubit, then amplitude damping on each touched qubit.
inline void apply_noise_trajectory(QuantumState &state, const Gate &gate, const NoiseModel &model,
                                   Rng &rng) {
    if (model.is_null()) {
        return;
    }
    if (gate.is_two_qubit()) {
        detail::depolarize_qubit(state, gate.q0, model.p2_depol, rng);
        detail::depolarize_qubit(state, gate.q1, model.p2_depol, rng);
        detail::damp_qubit(state, gate.q0, model.gamma_ad, rng);
        detail::damp_qubit(state, gate.q1, model.gamma_ad, rng);
    } else {
        detail::depolarize_qubit(state, gate.q0, model.p1_depol, rng);
        detail::damp_qubit(state, gate.q0, model.gamma_ad, rng);
    }
}

}  // namespace msq
