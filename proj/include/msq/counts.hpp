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
#include <map>
#include <string>

namespace msq {

/// Histogram of classical outcome bitstrings. Bit '0' encodes the +1
/// outcome, bit '1' the -1 outcome. Keys are rendered with classical bit 0
/// rightmost.
struct Counts {
    std::map<std::string, std::uint64_t> histogram;
    std::uint64_t shots = 0;

    void record(const std::string &key) {
        ++histogram[key];
        ++shots;
    }

    std::uint64_t count(const std::string &key) const {
        auto it = histogram.find(key);
        return it == histogram.end() ? 0 : it->second;
    }

    bool consistent() const {
        std::uint64_t total = 0;
        for (const auto &[key, n] : histogram) {
            total += n;
        }
        return total == shots;
    }

    bool operator==(const Counts &other) const = default;
};

}  // namespace msq
