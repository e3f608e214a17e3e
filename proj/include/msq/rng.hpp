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

namespace msq {

/// Deterministic counter-based random stream (SplitMix64 core).
///
/// Streams are derived from a master seed and a stream index, so shot k of a
/// run draws from Rng::stream(seed, k) no matter in which order shots execute.
/// All sampling in the simulator goes through this class; no global state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Stream `index` of the family identified by `master_seed`.
    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        // Decorrelate (seed, index) pairs by finalizing each component
        // separately before combining.
        return Rng(mix(master_seed) ^ mix(0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be >= 1; bias is negligible for small n.
    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    bool bernoulli(double p) { return p > 0.0 && uniform() < p; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace msq
