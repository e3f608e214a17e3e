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
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "msq/counts.hpp"
#include "msq/magic_square.hpp"
#include "msq/pauli.hpp"
#include "msq/rng.hpp"
#include "msq/state.hpp"

namespace msq {

/// Non-demolition measurement of a two-qubit +-1 observable: sample the
/// outcome from the Born probabilities of the two eigenspaces, project with
/// (I +- A)/2 and renormalize. Re-measuring immediately repeats the outcome.
inline int qnd_measure(QuantumState &state, const PauliObservable &obs, Rng &rng) {
    if (state.n_qubits() != 2) {
        throw std::invalid_argument("qnd_measure: expected a 2-qubit state");
    }
    const Mat4 a = obs.matrix();
    const auto &amps = state.amplitudes();
    // A|psi>
    std::array<cdouble, 4> apsi{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            apsi[static_cast<std::size_t>(r)] += a[static_cast<std::size_t>(r * 4 + c)] * amps[static_cast<std::size_t>(c)];
        }
    }
    cdouble overlap = 0.0;  // <psi|A|psi>
    for (int i = 0; i < 4; ++i) {
        overlap += std::conj(amps[static_cast<std::size_t>(i)]) * apsi[static_cast<std::size_t>(i)];
    }
    const double p_plus = std::clamp(0.5 * (1.0 + overlap.real()), 0.0, 1.0);
    const int outcome = rng.uniform() < p_plus ? +1 : -1;
    const double branch = outcome == +1 ? p_plus : 1.0 - p_plus;
    const double scale = 1.0 / std::sqrt(std::max(branch, 1e-300));
    auto &mut = state.mutable_amplitudes();
    for (int i = 0; i < 4; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        mut[idx] = 0.5 * (mut[idx] + static_cast<double>(outcome) * apsi[idx]) * scale;
    }
    return outcome;
}

struct SequentialRunResult {
    std::array<Counts, 3> per_slot;  // indexed by measurement position
    Counts product;
};

/// Measure the three observables of a line sequentially (QND) on fresh
/// copies of `input`, in the order given by `order` (a permutation of
/// {1,2,3} into the line's cell positions). Each recorded bit, and hence the
/// product, is flipped with probability `readout_flip`; there are no gates
/// in this mode, so gate noise does not apply.
inline SequentialRunResult sequential_line_run(const QuantumState &input, const LineId &line,
                                               const std::array<int, 3> &order,
                                               std::uint64_t shots, std::uint64_t seed,
                                               double readout_flip = 0.0) {
    if (shots == 0) {
        throw std::invalid_argument("sequential_line_run: shots must be >= 1");
    }
    bool seen[3] = {false, false, false};
    for (int slot : order) {
        if (slot < 1 || slot > 3 || seen[slot - 1]) {
            throw std::invalid_argument("sequential_line_run: order must be a permutation of 1..3");
        }
        seen[slot - 1] = true;
    }
    const auto observables = line_observables(line);
    SequentialRunResult result;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng = Rng::stream(seed, shot);
        QuantumState state = input;
        int product_bit = 0;
        for (int k = 0; k < 3; ++k) {
            const PauliObservable &obs = observables[static_cast<std::size_t>(order[static_cast<std::size_t>(k)] - 1)];
            int bit = qnd_measure(state, obs, rng) == +1 ? 0 : 1;
            if (rng.bernoulli(readout_flip)) {
                bit ^= 1;
            }
            product_bit ^= bit;
            result.per_slot[static_cast<std::size_t>(k)].record(bit ? "1" : "0");
        }
        result.product.record(product_bit ? "1" : "0");
    }
    return result;
}

}  // namespace msq
