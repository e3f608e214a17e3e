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
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "msq/matrix.hpp"
#include "msq/rng.hpp"

namespace msq {

/// Normalized complex amplitude vector over n qubits.
///
/// Qubit 0 is the least significant bit of the basis index. For product
/// states written |a>|b>, the leftmost ket is qubit 0.
class QuantumState {
  public:
    /// |0...0> on n qubits.
    explicit QuantumState(int n_qubits) : n_qubits_(n_qubits) {
        if (n_qubits < 1) {
            throw std::invalid_argument("QuantumState: n_qubits must be positive");
        }
        amps_.assign(std::size_t{1} << n_qubits, 0.0);
        amps_[0] = 1.0;
    }

    static QuantumState from_amplitudes(int n_qubits, std::vector<cdouble> amplitudes) {
        QuantumState s(n_qubits);
        if (amplitudes.size() != s.amps_.size()) {
            throw std::invalid_argument("QuantumState: amplitude vector has wrong length");
        }
        double norm2 = 0.0;
        for (const cdouble &a : amplitudes) {
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > 1e-9) {
            throw std::invalid_argument("QuantumState: amplitudes not normalized (|psi|^2 = " +
                                        std::to_string(norm2) + ")");
        }
        s.amps_ = std::move(amplitudes);
        return s;
    }

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cdouble> &amplitudes() const { return amps_; }
    cdouble amplitude(std::size_t basis_index) const { return amps_.at(basis_index); }

    double norm2() const {
        double s = 0.0;
        for (const cdouble &a : amps_) {
            s += std::norm(a);
        }
        return s;
    }

    void check_target(int qubit) const {
        if (qubit < 0 || qubit >= n_qubits_) {
            throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                    std::to_string(n_qubits_) + "-qubit state");
        }
    }

    void apply_1q(const Mat2 &u, int target) {
        check_target(target);
        const std::size_t bit = std::size_t{1} << target;
        const std::size_t n = amps_.size();
        for (std::size_t base = 0; base < n; ++base) {
            if (base & bit) {
                continue;
            }
            const cdouble a0 = amps_[base];
            const cdouble a1 = amps_[base | bit];
            amps_[base] = u[0] * a0 + u[1] * a1;
            amps_[base | bit] = u[2] * a0 + u[3] * a1;
        }
    }

    /// Apply a 4x4 unitary to qubits (qa, qb), where qa indexes the low bit
    /// of the matrix' 2-bit subspace index and qb the high bit.
    void apply_2q(const Mat4 &u, int qa, int qb) {
        check_target(qa);
        check_target(qb);
        if (qa == qb) {
            throw std::invalid_argument("apply_2q: target qubits must be distinct");
        }
        const std::size_t abit = std::size_t{1} << qa;
        const std::size_t bbit = std::size_t{1} << qb;
        const std::size_t n = amps_.size();
        for (std::size_t base = 0; base < n; ++base) {
            if (base & (abit | bbit)) {
                continue;
            }
            const std::size_t idx[4] = {base, base | abit, base | bbit, base | abit | bbit};
            cdouble in[4];
            for (int k = 0; k < 4; ++k) {
                in[k] = amps_[idx[k]];
            }
            for (int r = 0; r < 4; ++r) {
                cdouble acc = 0.0;
                for (int c = 0; c < 4; ++c) {
                    acc += u[static_cast<std::size_t>(r * 4 + c)] * in[c];
                }
                amps_[idx[r]] = acc;
            }
        }
    }

    void apply_x(int target) {
        check_target(target);
        const std::size_t bit = std::size_t{1} << target;
        for (std::size_t base = 0; base < amps_.size(); ++base) {
            if (!(base & bit)) {
                std::swap(amps_[base], amps_[base | bit]);
            }
        }
    }

    void apply_cnot(int control, int target) {
        check_target(control);
        check_target(target);
        if (control == target) {
            throw std::invalid_argument("apply_cnot: control equals target");
        }
        const std::size_t cbit = std::size_t{1} << control;
        const std::size_t tbit = std::size_t{1} << target;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cbit) && !(i & tbit)) {
                std::swap(amps_[i], amps_[i | tbit]);
            }
        }
    }

    double probability_of_bit(int qubit, int bit) const {
        check_target(qubit);
        const std::size_t qbit = std::size_t{1} << qubit;
        double p = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (((i & qbit) != 0) == (bit != 0)) {
                p += std::norm(amps_[i]);
            }
        }
        return p;
    }

    /// Projective z measurement of one qubit. Returns the outcome +1 (bit 0)
    /// or -1 (bit 1) and collapses the state in place.
    int measure_z(int qubit, Rng &rng) {
        const double p0 = probability_of_bit(qubit, 0);
        const bool got_zero = rng.uniform() < p0;
        collapse_bit(qubit, got_zero ? 0 : 1, got_zero ? p0 : 1.0 - p0);
        return got_zero ? +1 : -1;
    }

    /// Project onto `bit` of `qubit` and renormalize. `prob` is the branch
    /// probability (must be > 0).
    void collapse_bit(int qubit, int bit, double prob) {
        const std::size_t qbit = std::size_t{1} << qubit;
        const double scale = 1.0 / std::sqrt(std::max(prob, 1e-300));
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (((i & qbit) != 0) == (bit != 0)) {
                amps_[i] *= scale;
            } else {
                amps_[i] = 0.0;
            }
        }
    }

    void scale(double factor) {
        for (cdouble &a : amps_) {
            a *= factor;
        }
    }

    std::vector<cdouble> &mutable_amplitudes() { return amps_; }

  private:
    int n_qubits_;
    std::vector<cdouble> amps_;
};

/// Tensor product; `low` occupies the lower qubit indices.
inline QuantumState tensor(const QuantumState &low, const QuantumState &high) {
    const int n = low.n_qubits() + high.n_qubits();
    std::vector<cdouble> amps(std::size_t{1} << n);
    for (std::size_t h = 0; h < high.dim(); ++h) {
        for (std::size_t l = 0; l < low.dim(); ++l) {
            amps[(h << low.n_qubits()) | l] = high.amplitude(h) * low.amplitude(l);
        }
    }
    return QuantumState::from_amplitudes(n, std::move(amps));
}

/// Named single-qubit Pauli eigenstates: "+1_z", "-1_z", "+1_x", "-1_x",
/// "+1_y", "-1_y" (aliases "0" and "1" for the z pair).
inline QuantumState pauli_eigenstate(const std::string &name) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<cdouble> amps;
    if (name == "+1_z" || name == "0") {
        amps = {1.0, 0.0};
    } else if (name == "-1_z" || name == "1") {
        amps = {0.0, 1.0};
    } else if (name == "+1_x") {
        amps = {s, s};
    } else if (name == "-1_x") {
        amps = {s, -s};
    } else if (name == "+1_y") {
        amps = {s, cdouble(0.0, s)};
    } else if (name == "-1_y") {
        amps = {s, cdouble(0.0, -s)};
    } else {
        throw std::invalid_argument("unknown eigenstate name: " + name);
    }
    return QuantumState::from_amplitudes(1, std::move(amps));
}

/// Haar-ish random pure state (Gaussian amplitudes, normalized).
inline QuantumState random_state(int n_qubits, Rng &rng) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<cdouble> amps(dim);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        // Box-Muller
        const double u1 = std::max(rng.uniform(), 1e-300);
        const double u2 = rng.uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        amps[i] = cdouble(r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2));
        norm2 += std::norm(amps[i]);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (cdouble &a : amps) {
        a *= scale;
    }
    return QuantumState::from_amplitudes(n_qubits, std::move(amps));
}

inline QuantumState random_product_state(int n_qubits, Rng &rng) {
    QuantumState s = random_state(1, rng);
    for (int q = 1; q < n_qubits; ++q) {
        s = tensor(s, random_state(1, rng));
    }
    return s;
}

}  // namespace msq
