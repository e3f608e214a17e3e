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
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "msq/counts.hpp"
#include "msq/hull.hpp"
#include "msq/vectors.hpp"

namespace msq {

/// Distances below this are treated as "on the hull": the projection solver
/// resolves interior points to far better than 1e-7.
inline constexpr double kViolationDistanceTol = 1e-7;

/// Mean and standard deviation of one line's dichotomous counts:
///   mean  = (n+ - n-) / n
///   sigma = 2 sqrt(p+ (1 - p+) / n),  p+ = n+ / n.
/// When p+ is 0 or 1 the estimator degenerates to sigma = 0; the rule-of-three
/// bound 3/n is carried along as a more honest uncertainty ceiling.
struct LineStats {
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
    std::uint64_t shots = 0;
    double mean = 0.0;
    double sigma = 0.0;
    bool degenerate = false;
    double sigma_rule_of_three = 0.0;
};

inline LineStats stats_from_counts(const Counts &counts) {
    if (counts.shots == 0) {
        throw std::invalid_argument("stats_from_counts: zero shots");
    }
    if (!counts.consistent()) {
        throw std::invalid_argument("stats_from_counts: histogram does not sum to shots");
    }
    for (const auto &[key, n] : counts.histogram) {
        if (key != "0" && key != "1") {
            throw std::invalid_argument("stats_from_counts: expected single-bit keys, got '" + key +
                                        "'");
        }
    }
    LineStats s;
    s.n_plus = counts.count("0");
    s.n_minus = counts.count("1");
    s.shots = counts.shots;
    const double n = static_cast<double>(s.shots);
    s.mean = (static_cast<double>(s.n_plus) - static_cast<double>(s.n_minus)) / n;
    const double p = static_cast<double>(s.n_plus) / n;
    s.sigma = 2.0 * std::sqrt(p * (1.0 - p) / n);
    s.degenerate = (s.n_plus == 0 || s.n_minus == 0);
    s.sigma_rule_of_three = 3.0 / n;
    return s;
}

/// The measured result vector and its per-line standard deviations, in
/// canonical (row1..row3, col1..col3) order.
inline std::pair<Point6, Point6> result_from_counts(const std::array<Counts, 6> &counts) {
    Point6 mean{}, sigma{};
    for (int i = 0; i < 6; ++i) {
        const LineStats s = stats_from_counts(counts[static_cast<std::size_t>(i)]);
        mean[static_cast<std::size_t>(i)] = s.mean;
        sigma[static_cast<std::size_t>(i)] = s.sigma;
    }
    return {mean, sigma};
}

struct MaxOverlap {
    double value = -std::numeric_limits<double>::infinity();
    int index = 0;         // lowest maximizer in canonical set order
    LineSigns argmax{};
};

/// max_j v . q_j over the 32 quantum vectors. Any value above 4 is
/// incompatible with a realistic non-contextual model.
inline MaxOverlap max_overlap(const Point6 &v) {
    const auto &quantum = VectorSets::standard().quantum;
    MaxOverlap best;
    for (std::size_t j = 0; j < quantum.size(); ++j) {
        const double o = dot(v, to_point(quantum[j]));
        if (o > best.value) {
            best.value = o;
            best.index = static_cast<int>(j);
            best.argmax = quantum[j];
        }
    }
    return best;
}

inline std::vector<double> all_overlaps(const Point6 &v) {
    const auto &quantum = VectorSets::standard().quantum;
    std::vector<double> out;
    out.reserve(quantum.size());
    for (const LineSigns &q : quantum) {
        out.push_back(dot(v, to_point(q)));
    }
    return out;
}

/// Radius of the conservative standard-deviation hypersphere: ||sigma||_2.
inline double sigma_radius(const Point6 &sigma) { return std::sqrt(dot(sigma, sigma)); }

struct ViolationScore {
    double score = 0.0;        // hull distance in units of the sigma radius
    bool unbounded = false;    // nonzero distance with zero sigma radius
    bool violation = false;
};

/// Hull distance divided by the sigma-sphere radius; the headline number of
/// the whole analysis.
inline ViolationScore violation_score(const Point6 &v, const Point6 &sigma) {
    ViolationScore out;
    const double distance = project_onto_realism_hull(v).distance;
    const double radius = sigma_radius(sigma);
    out.violation = distance > kViolationDistanceTol;
    if (radius > 0.0) {
        out.score = distance / radius;
    } else if (out.violation) {
        out.score = std::numeric_limits<double>::infinity();
        out.unbounded = true;
    }
    return out;
}

struct AnalysisReport {
    std::array<LineStats, 6> lines{};
    Point6 result_vector{};
    Point6 sigma_vector{};
    std::vector<double> overlaps;
    MaxOverlap overlap_max;
    HullProjection projection;
    double sigma_sphere_radius = 0.0;
    double score = 0.0;
    bool score_unbounded = false;
    bool violation = false;
    std::vector<std::string> notes;
};

/// Full analysis pipeline: statistics, bound check, hull projection,
/// significance score. `counts` must be in canonical line order.
inline AnalysisReport analyze(const std::array<Counts, 6> &counts) {
    AnalysisReport rep;
    for (int i = 0; i < 6; ++i) {
        rep.lines[static_cast<std::size_t>(i)] = stats_from_counts(counts[static_cast<std::size_t>(i)]);
        rep.result_vector[static_cast<std::size_t>(i)] = rep.lines[static_cast<std::size_t>(i)].mean;
        rep.sigma_vector[static_cast<std::size_t>(i)] = rep.lines[static_cast<std::size_t>(i)].sigma;
        if (rep.lines[static_cast<std::size_t>(i)].degenerate) {
            rep.notes.push_back("line " + std::to_string(i) +
                                ": one-sided counts; sigma = 0, rule-of-three bound " +
                                std::to_string(rep.lines[static_cast<std::size_t>(i)].sigma_rule_of_three));
        }
    }
    for (int i = 1; i < 6; ++i) {
        if (rep.lines[static_cast<std::size_t>(i)].shots != rep.lines[0].shots) {
            rep.notes.push_back("shot counts differ between lines");
            break;
        }
    }
    rep.overlaps = all_overlaps(rep.result_vector);
    rep.overlap_max = max_overlap(rep.result_vector);
    rep.projection = project_onto_realism_hull(rep.result_vector);
    rep.sigma_sphere_radius = sigma_radius(rep.sigma_vector);
    rep.violation = rep.projection.distance > kViolationDistanceTol;
    if (rep.sigma_sphere_radius > 0.0) {
        rep.score = rep.projection.distance / rep.sigma_sphere_radius;
    } else if (rep.violation) {
        rep.score = std::numeric_limits<double>::infinity();
        rep.score_unbounded = true;
        rep.notes.push_back("sigma radius is zero with nonzero distance; score unbounded");
    } else {
        rep.score = 0.0;
    }
    return rep;
}

}  // namespace msq
