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

#include <algorithm>
#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "msq/analysis.hpp"
#include "msq/hull.hpp"
#include "msq/rng.hpp"
#include "msq/vectors.hpp"

using namespace msq;

namespace {

Counts make_counts(std::uint64_t n_plus, std::uint64_t n_minus) {
    Counts c;
    if (n_plus > 0) {
        c.histogram["0"] = n_plus;
    }
    if (n_minus > 0) {
        c.histogram["1"] = n_minus;
    }
    c.shots = n_plus + n_minus;
    return c;
}

// Counts for the best run reported for the ibmqx4 device (8192 shots/line).
std::array<Counts, 6> reference_counts() {
    return {make_counts(7943, 249), make_counts(7731, 461), make_counts(7506, 686),
            make_counts(7813, 379), make_counts(7851, 341), make_counts(2033, 6159)};
}

Point6 random_hull_mixture(Rng &rng, int max_support = 32) {
    const auto &realism = VectorSets::standard().realism;
    const int support = 1 + rng.uniform_int(max_support);
    std::vector<double> w(realism.size(), 0.0);
    double total = 0.0;
    for (int k = 0; k < support; ++k) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(32));
        const double u = rng.uniform();
        w[j] += u;
        total += u;
    }
    if (total == 0.0) {
        w[0] = total = 1.0;
    }
    Point6 p{};
    for (std::size_t j = 0; j < realism.size(); ++j) {
        for (int i = 0; i < 6; ++i) {
            p[static_cast<std::size_t>(i)] +=
                (w[j] / total) * static_cast<double>(realism[j][static_cast<std::size_t>(i)]);
        }
    }
    return p;
}

}  // namespace

TEST(Enumeration, AllPlusSquareGivesAllPlusVector) {
    const auto squares = enumerate_sign_squares();
    ASSERT_EQ(squares.size(), 512u);
    EXPECT_EQ(squares[0].second, (LineSigns{1, 1, 1, 1, 1, 1}));
}

TEST(Enumeration, ReferenceSquaresGiveExpectedVectors) {
    // Two published example squares: two -1s and six -1s.
    SignSquare two_minus{{{{{1, 1, 1}}, {{1, -1, -1}}, {{1, 1, 1}}}}};
    EXPECT_EQ(two_minus.line_products(), (LineSigns{1, 1, 1, 1, -1, -1}));
    SignSquare six_minus{{{{{-1, -1, 1}}, {{-1, -1, -1}}, {{1, 1, -1}}}}};
    EXPECT_EQ(six_minus.line_products(), (LineSigns{1, -1, -1, 1, 1, 1}));
}

TEST(Enumeration, DistinctImageHas32Vectors) {
    const auto distinct = distinct_result_vectors(enumerate_sign_squares());
    EXPECT_EQ(distinct.size(), 32u);
}

TEST(VectorSetsTest, GeneratingRuleMatchesBruteForce) {
    const VectorSets &sets = VectorSets::standard();
    ASSERT_EQ(sets.realism.size(), 32u);
    ASSERT_EQ(sets.quantum.size(), 32u);
    const auto brute = distinct_result_vectors(enumerate_sign_squares());
    const std::set<LineSigns> rule(sets.realism.begin(), sets.realism.end());
    const std::set<LineSigns> image(brute.begin(), brute.end());
    EXPECT_EQ(rule, image);
}

TEST(VectorSetsTest, GroupsAreDisjointAndCoverAllParityVectors) {
    const VectorSets &sets = VectorSets::standard();
    std::set<LineSigns> all(sets.realism.begin(), sets.realism.end());
    for (const LineSigns &q : sets.quantum) {
        EXPECT_TRUE(all.insert(q).second);  // no overlap with realism
    }
    EXPECT_EQ(all.size(), 64u);
    // Realism vectors have an even number of -1 entries, quantum an odd one.
    for (const LineSigns &r : sets.realism) {
        EXPECT_EQ(std::count(r.begin(), r.end(), -1) % 2, 0);
    }
    for (const LineSigns &q : sets.quantum) {
        EXPECT_EQ(std::count(q.begin(), q.end(), -1) % 2, 1);
    }
}

TEST(VectorSetsTest, ExampleMemberships) {
    const VectorSets &sets = VectorSets::standard();
    const LineSigns realism_example{1, 1, 1, 1, -1, -1};
    const LineSigns quantum_example{1, 1, 1, 1, 1, -1};
    EXPECT_NE(std::find(sets.realism.begin(), sets.realism.end(), realism_example),
              sets.realism.end());
    EXPECT_NE(std::find(sets.quantum.begin(), sets.quantum.end(), quantum_example),
              sets.quantum.end());
}

TEST(Statistics, ReferenceCountsReproducePublishedMeansAndSigmas) {
    const auto [mean, sigma] = result_from_counts(reference_counts());
    const Point6 expected_mean{0.939, 0.887, 0.833, 0.907, 0.917, -0.504};
    // Printed to three significant figures; allow one unit in the last digit.
    const Point6 expected_sigma{3.79e-3, 5.09e-3, 6.12e-3, 4.64e-3, 4.41e-3, 9.55e-3};
    for (int i = 0; i < 6; ++i) {
        EXPECT_NEAR(mean[static_cast<std::size_t>(i)], expected_mean[static_cast<std::size_t>(i)],
                    5e-4);
        EXPECT_NEAR(sigma[static_cast<std::size_t>(i)],
                    expected_sigma[static_cast<std::size_t>(i)], 1e-5);
    }
}

TEST(Statistics, DeterministicCountsGiveZeroSigmaAndRuleOfThree) {
    const LineStats s = stats_from_counts(make_counts(8192, 0));
    EXPECT_DOUBLE_EQ(s.mean, 1.0);
    EXPECT_DOUBLE_EQ(s.sigma, 0.0);
    EXPECT_TRUE(s.degenerate);
    EXPECT_DOUBLE_EQ(s.sigma_rule_of_three, 3.0 / 8192.0);
}

TEST(Statistics, ClosedFormsMatchToMachinePrecision) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Rng rng = Rng::stream(301, trial);
        const auto n_plus = static_cast<std::uint64_t>(rng.uniform_int(10000));
        const auto n_minus = static_cast<std::uint64_t>(1 + rng.uniform_int(10000));
        const LineStats s = stats_from_counts(make_counts(n_plus, n_minus));
        const double n = static_cast<double>(n_plus + n_minus);
        const double p = static_cast<double>(n_plus) / n;
        ASSERT_GE(s.mean, -1.0);
        ASSERT_LE(s.mean, 1.0);
        ASSERT_DOUBLE_EQ(s.mean, (2.0 * static_cast<double>(n_plus) - n) / n);
        ASSERT_DOUBLE_EQ(s.sigma, 2.0 * std::sqrt(p * (1.0 - p) / n));
    }
}

TEST(Statistics, RejectsZeroShotsAndBadKeys) {
    EXPECT_THROW(stats_from_counts(Counts{}), std::invalid_argument);
    Counts multi;
    multi.record("00");
    EXPECT_THROW(stats_from_counts(multi), std::invalid_argument);
}

TEST(Overlap, QuantumSelfProductIsSix) {
    const MaxOverlap m = max_overlap(to_point(ideal_quantum_vector()));
    EXPECT_DOUBLE_EQ(m.value, 6.0);
    EXPECT_EQ(m.argmax, ideal_quantum_vector());
}

TEST(Overlap, RealismVectorsNeverExceedFourAndReachIt) {
    const VectorSets &sets = VectorSets::standard();
    int max_int = -100;
    for (const LineSigns &r : sets.realism) {
        const MaxOverlap m = max_overlap(to_point(r));
        EXPECT_LE(m.value, 4.0 + 1e-12);
        for (const LineSigns &q : sets.quantum) {
            max_int = std::max(max_int, dot(r, q));
        }
    }
    EXPECT_EQ(max_int, 4);
}

TEST(Overlap, ReferenceVectorAgainstIdealQuantumPoint) {
    const auto [mean, sigma] = result_from_counts(reference_counts());
    const MaxOverlap m = max_overlap(mean);
    EXPECT_NEAR(m.value, 4.987, 1e-3);
    EXPECT_EQ(m.argmax, ideal_quantum_vector());
}

TEST(Hull, OriginIsInside) {
    const HullProjection p = project_onto_realism_hull(Point6{});
    EXPECT_LT(p.distance, 1e-8);
    EXPECT_TRUE(p.converged);
}

TEST(Hull, VerticesProjectToThemselves) {
    const auto &realism = VectorSets::standard().realism;
    for (std::size_t j = 0; j < realism.size(); ++j) {
        const HullProjection p = project_onto_realism_hull(to_point(realism[j]));
        ASSERT_EQ(p.distance, 0.0);
        ASSERT_NEAR(p.weights[j], 1.0, 1e-12);
    }
}

TEST(Hull, ReferenceVectorDistanceMatchesFacetFormula) {
    const auto [mean, sigma] = result_from_counts(reference_counts());
    const HullProjection p = project_onto_realism_hull(mean);
    // Independent oracle: orthogonal distance to the supporting hyperplane
    // {x . q1 = 4}, exact when the projection lands on that facet.
    const double overlap = dot(mean, to_point(ideal_quantum_vector()));
    const double facet_distance = (overlap - 4.0) / std::sqrt(6.0);
    EXPECT_NEAR(p.distance, facet_distance, 1e-9);
    EXPECT_NEAR(p.distance, 0.4029, 5e-4);
    EXPECT_TRUE(p.converged);
    // The nearest point must lie on the supporting facet for the formula to
    // be exact; its weights certify hull membership.
    EXPECT_NEAR(dot(p.nearest_point, to_point(ideal_quantum_vector())), 4.0, 1e-7);
    double weight_sum = 0.0;
    for (double w : p.weights) {
        ASSERT_GE(w, 0.0);
        weight_sum += w;
    }
    EXPECT_NEAR(weight_sum, 1.0, 1e-9);
    // nearest_point is the weighted vertex combination by construction;
    // verify against an independent recombination.
    const auto &realism = VectorSets::standard().realism;
    Point6 recombined{};
    for (std::size_t j = 0; j < realism.size(); ++j) {
        for (int i = 0; i < 6; ++i) {
            recombined[static_cast<std::size_t>(i)] +=
                p.weights[j] * static_cast<double>(realism[j][static_cast<std::size_t>(i)]);
        }
    }
    for (int i = 0; i < 6; ++i) {
        ASSERT_NEAR(recombined[static_cast<std::size_t>(i)],
                    p.nearest_point[static_cast<std::size_t>(i)], 1e-9);
    }
    // Since the projection lands on the facet, it must equal the orthogonal
    // hyperplane projection v - ((v.q1 - 4)/6) q1 componentwise.
    for (int i = 0; i < 6; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const double analytic =
            mean[idx] - (overlap - 4.0) / 6.0 * static_cast<double>(ideal_quantum_vector()[idx]);
        ASSERT_NEAR(p.nearest_point[idx], analytic, 1e-6);
    }
}

TEST(Hull, IdealQuantumPointDistance) {
    const HullProjection p = project_onto_realism_hull(to_point(ideal_quantum_vector()));
    EXPECT_NEAR(p.distance, 2.0 / std::sqrt(6.0), 1e-6);
}

TEST(Hull, ReportsResidualWhenCappedBeforeConvergence) {
    HullSolverOptions opts;
    opts.max_iterations = 1;
    const auto &realism = VectorSets::standard().realism;
    std::vector<Point6> verts;
    for (const LineSigns &r : realism) {
        verts.push_back(to_point(r));
    }
    const auto [mean, sigma] = result_from_counts(reference_counts());
    const HullProjection p = project_onto_hull(mean, verts, opts);
    EXPECT_FALSE(p.converged);
    EXPECT_GT(p.kkt_residual, 1e-9);
    EXPECT_LE(p.iterations, 1);
}

TEST(Hull, RandomMixturesAreInside) {
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        Rng rng = Rng::stream(401, trial);
        const Point6 v = random_hull_mixture(rng);
        const HullProjection p = project_onto_realism_hull(v);
        ASSERT_LT(p.distance, 1e-8) << "trial " << trial;
    }
}

TEST(Hull, ProjectionIsLocallyOptimal) {
    // For points outside the hull, stepping the nearest point 1e-4 along any
    // feasible direction (toward another hull point) never reduces the
    // distance.
    Rng rng(402);
    int outside_points = 0;
    while (outside_points < 5) {
        Point6 v{};
        for (int i = 0; i < 6; ++i) {
            v[static_cast<std::size_t>(i)] = 3.0 * (rng.uniform() - 0.5) * 2.0;
        }
        const HullProjection p = project_onto_realism_hull(v);
        if (p.distance < 1e-3) {
            continue;
        }
        ++outside_points;
        for (int k = 0; k < 1000; ++k) {
            const Point6 z = random_hull_mixture(rng);
            Point6 dir;
            double nrm = 0.0;
            for (int i = 0; i < 6; ++i) {
                const auto idx = static_cast<std::size_t>(i);
                dir[idx] = z[idx] - p.nearest_point[idx];
                nrm += dir[idx] * dir[idx];
            }
            nrm = std::sqrt(nrm);
            if (nrm < 1e-9) {
                continue;
            }
            double f = 0.0;
            for (int i = 0; i < 6; ++i) {
                const auto idx = static_cast<std::size_t>(i);
                const double moved = p.nearest_point[idx] + 1e-4 * dir[idx] / nrm;
                f += (moved - v[idx]) * (moved - v[idx]);
            }
            ASSERT_GE(std::sqrt(f), p.distance - 1e-12);
        }
    }
}

TEST(SigmaRadius, PublishedValueAndEdgeCases) {
    const auto [mean, sigma] = result_from_counts(reference_counts());
    EXPECT_NEAR(sigma_radius(sigma), 0.0145, 1e-4);
    EXPECT_DOUBLE_EQ(sigma_radius(Point6{}), 0.0);
    EXPECT_DOUBLE_EQ(sigma_radius(Point6{0.01, 0, 0, 0, 0, 0}), 0.01);
}

TEST(Score, ReferenceRunScoresAlmost28Sigma) {
    const AnalysisReport rep = analyze(reference_counts());
    EXPECT_TRUE(rep.violation);
    EXPECT_NEAR(rep.score, 27.8, 0.5);
    EXPECT_FALSE(rep.score_unbounded);

    const auto [mean, sigma] = result_from_counts(reference_counts());
    const ViolationScore vs = violation_score(mean, sigma);
    EXPECT_NEAR(vs.score, rep.score, 1e-9);
    EXPECT_TRUE(vs.violation);
    EXPECT_FALSE(vs.unbounded);
}

TEST(Score, StandaloneScoreHandlesVertexAndUnboundedCases) {
    const Point6 sigmas{1e-3, 1e-3, 1e-3, 1e-3, 1e-3, 1e-3};
    const ViolationScore vertex =
        violation_score(to_point(VectorSets::standard().realism[0]), sigmas);
    EXPECT_EQ(vertex.score, 0.0);
    EXPECT_FALSE(vertex.violation);

    const ViolationScore ideal = violation_score(to_point(ideal_quantum_vector()), Point6{});
    EXPECT_TRUE(ideal.unbounded);
    EXPECT_TRUE(ideal.violation);
    EXPECT_TRUE(std::isinf(ideal.score));
}

TEST(Score, RealismVertexIsNoViolation) {
    // Counts that encode a realism vertex exactly: all six lines +1.
    std::array<Counts, 6> counts;
    counts.fill(make_counts(4096, 0));
    const AnalysisReport rep = analyze(counts);
    EXPECT_FALSE(rep.violation);
    EXPECT_EQ(rep.projection.distance, 0.0);
    EXPECT_EQ(rep.score, 0.0);
}

TEST(Score, IdealNoiselessVectorHasUnboundedScore) {
    // Deterministic 8192-shot counts for (1,1,1,1,1,-1): sigmas are zero.
    std::array<Counts, 6> counts;
    for (int i = 0; i < 5; ++i) {
        counts[static_cast<std::size_t>(i)] = make_counts(8192, 0);
    }
    counts[5] = make_counts(0, 8192);
    const AnalysisReport rep = analyze(counts);
    EXPECT_NEAR(rep.projection.distance, 2.0 / std::sqrt(6.0), 1e-6);
    EXPECT_TRUE(rep.score_unbounded);
    EXPECT_TRUE(rep.violation);
    EXPECT_DOUBLE_EQ(rep.sigma_sphere_radius, 0.0);
}
