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
#include <cmath>
#include <complex>
#include <cstddef>

namespace msq {

using cdouble = std::complex<double>;

// Small dense complex matrices, row-major. Mat2 acts on one qubit,
// Mat4 on two. Everything here is value-semantic and allocation-free.
using Mat2 = std::array<cdouble, 4>;
using Mat4 = std::array<cdouble, 16>;

inline constexpr Mat2 kIdentity2{1.0, 0.0, 0.0, 1.0};

inline Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) {
        m[static_cast<std::size_t>(i * 4 + i)] = 1.0;
    }
    return m;
}

inline Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cdouble acc = 0.0;
            for (int k = 0; k < 2; ++k) {
                acc += a[static_cast<std::size_t>(i * 2 + k)] * b[static_cast<std::size_t>(k * 2 + j)];
            }
            r[static_cast<std::size_t>(i * 2 + j)] = acc;
        }
    }
    return r;
}

inline Mat4 matmul(const Mat4 &a, const Mat4 &b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            cdouble acc = 0.0;
            for (int k = 0; k < 4; ++k) {
                acc += a[static_cast<std::size_t>(i * 4 + k)] * b[static_cast<std::size_t>(k * 4 + j)];
            }
            r[static_cast<std::size_t>(i * 4 + j)] = acc;
        }
    }
    return r;
}

inline Mat2 dagger(const Mat2 &m) {
    return Mat2{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

inline Mat4 dagger(const Mat4 &m) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r[static_cast<std::size_t>(i * 4 + j)] = std::conj(m[static_cast<std::size_t>(j * 4 + i)]);
        }
    }
    return r;
}

// Tensor product with `high` acting on the more significant qubit and `low`
// on the less significant one. Basis index of the result is (hi_bit << 1) | lo_bit.
inline Mat4 kron(const Mat2 &high, const Mat2 &low) {
    Mat4 r{};
    for (int hr = 0; hr < 2; ++hr) {
        for (int hc = 0; hc < 2; ++hc) {
            for (int lr = 0; lr < 2; ++lr) {
                for (int lc = 0; lc < 2; ++lc) {
                    int row = (hr << 1) | lr;
                    int col = (hc << 1) | lc;
                    r[static_cast<std::size_t>(row * 4 + col)] =
                        high[static_cast<std::size_t>(hr * 2 + hc)] * low[static_cast<std::size_t>(lr * 2 + lc)];
                }
            }
        }
    }
    return r;
}

template <std::size_t N>
double max_abs_diff(const std::array<cdouble, N> &a, const std::array<cdouble, N> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

// max |(U†U - I)_ij|
inline double unitarity_defect(const Mat2 &m) {
    return max_abs_diff(matmul(dagger(m), m), kIdentity2);
}

inline double unitarity_defect(const Mat4 &m) {
    return max_abs_diff(matmul(dagger(m), m), identity4());
}

template <std::size_t N>
double hermiticity_defect(const std::array<cdouble, N> &m) {
    return max_abs_diff(m, dagger(m));
}

inline bool is_unitary(const Mat2 &m, double tol = 1e-12) { return unitarity_defect(m) < tol; }
inline bool is_unitary(const Mat4 &m, double tol = 1e-12) { return unitarity_defect(m) < tol; }

// Two matrices equal up to a global phase if A† B is a scalar multiple of I
// with unit-modulus scalar.
inline bool equal_up_to_phase(const Mat2 &a, const Mat2 &b, double tol = 1e-12) {
    Mat2 p = matmul(dagger(a), b);
    cdouble phase = std::abs(p[0]) > std::abs(p[3]) ? p[0] : p[3];
    if (std::abs(std::abs(phase) - 1.0) > 1e-6) {
        return false;
    }
    Mat2 scaled;
    for (std::size_t i = 0; i < 4; ++i) {
        scaled[i] = b[i] / phase;
    }
    return max_abs_diff(a, scaled) < tol;
}

inline double commutator_max_abs(const Mat4 &a, const Mat4 &b) {
    Mat4 ab = matmul(a, b);
    Mat4 ba = matmul(b, a);
    return max_abs_diff(ab, ba);
}

}  // namespace msq
