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
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "msq/hull.hpp"
#include "msq/line_circuits.hpp"
#include "msq/magic_square.hpp"
#include "msq/qnd.hpp"
#include "msq/simulate.hpp"
#include "msq/vectors.hpp"

namespace msq {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    double unitarity_tol = 1e-12;
    int flip_row = 0;  // 1..3 flips the sign of one square cell (audit hook)
    int flip_col = 0;
    std::uint64_t seed = 2026;
    int equivalence_states = 200;
    int qnd_trials = 10000;
    int hull_mixtures = 200;
};

/// The full invariant battery behind `msq verify`: operator identities,
/// circuit/operator equivalence, QND repeatability, bound tightness and hull
/// closure. Returns one entry per check; a release build must pass all.
inline std::vector<Check> run_verification(const VerifyOptions &opts = {}) {
    constexpr double pi = std::numbers::pi;
    std::vector<Check> checks;
    auto add = [&](const std::string &name, bool pass, const std::string &detail) {
        checks.push_back(Check{name, pass, detail});
    };

    MagicSquare square = MagicSquare::standard();
    if (opts.flip_row >= 1 && opts.flip_row <= 3 && opts.flip_col >= 1 && opts.flip_col <= 3) {
        square.at_mutable(opts.flip_row, opts.flip_col).sign *= -1;
    }

    {
        double worst = 0.0;
        worst = std::max(worst, unitarity_defect(kHadamard));
        worst = std::max(worst, unitarity_defect(kPauliX));
        worst = std::max(worst, unitarity_defect(gate_matrix_2q(Gate::cnot(0, 1))));
        for (double phi : {0.0, pi / 2, 3 * pi / 2}) {
            for (double lambda : {pi / 2, pi, 3 * pi / 2}) {
                worst = std::max(worst, unitarity_defect(u2_matrix(phi, lambda)));
            }
        }
        std::ostringstream ss;
        ss << "max defect " << worst << " vs tol " << opts.unitarity_tol;
        add("gate unitarity", worst < opts.unitarity_tol, ss.str());
    }

    {
        double worst = 0.0;
        for (int r = 1; r <= 3; ++r) {
            for (int c = 1; c <= 3; ++c) {
                const Mat4 a = square.at(r, c).matrix();
                worst = std::max(worst, hermiticity_defect(a));
                worst = std::max(worst, unitarity_defect(a));
            }
        }
        add("square cells hermitian and unitary", worst < 1e-12,
            "max defect " + std::to_string(worst));
    }

    {
        double worst = 0.0;
        for (int ordinal = 0; ordinal < 6; ++ordinal) {
            const LineId line = line_from_ordinal(ordinal);
            Mat4 expected = identity4();
            for (cdouble &e : expected) {
                e *= line_product_sign(line);
            }
            worst = std::max(worst, max_abs_diff(square.line_operator_product(line), expected));
        }
        add("line operator products match margins", worst < 1e-12,
            "max deviation from sign*I: " + std::to_string(worst));
    }

    {
        double worst = 0.0;
        for (int ordinal = 0; ordinal < 6; ++ordinal) {
            const auto obs = square.line(line_from_ordinal(ordinal));
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    worst = std::max(worst, commutator_max_abs(obs[static_cast<std::size_t>(a)].matrix(),
                                                               obs[static_cast<std::size_t>(b)].matrix()));
                }
            }
        }
        add("in-line observables commute", worst < 1e-12, "max commutator " + std::to_string(worst));
    }

    {
        const double c = commutator_max_abs(square.at(1, 1).matrix(), square.at(2, 2).matrix());
        add("cross-line pair does not commute", c > 1.0,
            "|[XxI, YxI]| = " + std::to_string(c));
    }

    {
        double worst = 0.0;
        for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(opts.equivalence_states);
             ++trial) {
            Rng rng = Rng::stream(opts.seed, trial);
            const QuantumState input = tensor(random_product_state(2, rng), QuantumState(1));
            for (int ordinal = 0; ordinal < 6; ++ordinal) {
                const LineId line = line_from_ordinal(ordinal);
                QuantumState s = input;
                for (const Gate &g : build_line_circuit(line).gates) {
                    apply_gate(s, g);
                }
                worst = std::max(worst,
                                 std::abs(expectation_z(s, 2) - line_product_sign(line)));
            }
        }
        add("circuit/operator equivalence", worst < 1e-9,
            "max |ancilla - line sign| = " + std::to_string(worst));
    }

    {
        bool ok = true;
        for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(opts.qnd_trials); ++trial) {
            Rng rng = Rng::stream(opts.seed + 1, trial);
            QuantumState s = random_state(2, rng);
            const PauliObservable obs =
                observable_at(1 + rng.uniform_int(3), 1 + rng.uniform_int(3));
            if (qnd_measure(s, obs, rng) != qnd_measure(s, obs, rng)) {
                ok = false;
                break;
            }
        }
        add("QND repeatability", ok, std::to_string(opts.qnd_trials) + " repeated measurements");
    }

    {
        const VectorSets &sets = VectorSets::standard();
        const auto brute = distinct_result_vectors(enumerate_sign_squares());
        const std::set<LineSigns> rule(sets.realism.begin(), sets.realism.end());
        const std::set<LineSigns> image(brute.begin(), brute.end());
        std::set<LineSigns> all = rule;
        for (const LineSigns &q : sets.quantum) {
            all.insert(q);
        }
        const bool ok = rule == image && rule.size() == 32 && sets.quantum.size() == 32 &&
                        all.size() == 64;
        add("enumeration matches generating rule", ok,
            "realism " + std::to_string(rule.size()) + ", union " + std::to_string(all.size()));
    }

    {
        const VectorSets &sets = VectorSets::standard();
        int max_rq = -100;
        int min_self = 100;
        for (const LineSigns &r : sets.realism) {
            min_self = std::min(min_self, dot(r, r));
            for (const LineSigns &q : sets.quantum) {
                max_rq = std::max(max_rq, dot(r, q));
            }
        }
        for (const LineSigns &q : sets.quantum) {
            min_self = std::min(min_self, dot(q, q));
        }
        add("bound tightness", max_rq == 4 && min_self == 6,
            "max r.q = " + std::to_string(max_rq) + ", self products " + std::to_string(min_self));
    }

    {
        double worst = 0.0;
        const auto &realism = VectorSets::standard().realism;
        for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(opts.hull_mixtures);
             ++trial) {
            Rng rng = Rng::stream(opts.seed + 2, trial);
            Point6 v{};
            double total = 0.0;
            std::vector<double> w(realism.size());
            for (double &x : w) {
                x = rng.uniform();
                total += x;
            }
            for (std::size_t j = 0; j < realism.size(); ++j) {
                for (int i = 0; i < 6; ++i) {
                    v[static_cast<std::size_t>(i)] +=
                        (w[j] / total) * static_cast<double>(realism[j][static_cast<std::size_t>(i)]);
                }
            }
            worst = std::max(worst, project_onto_realism_hull(v).distance);
        }
        add("hull closure under mixtures", worst < 1e-8, "max distance " + std::to_string(worst));
    }

    return checks;
}

inline bool all_passed(const std::vector<Check> &checks) {
    for (const Check &c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace msq
