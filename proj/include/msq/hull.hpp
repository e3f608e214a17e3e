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
#include <cstddef>
#include <limits>
#include <vector>

#include "msq/vectors.hpp"

namespace msq {

using Point6 = std::array<double, 6>;

inline double dot(const Point6 &a, const Point6 &b) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) {
        s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    }
    return s;
}

inline Point6 to_point(const LineSigns &v) {
    Point6 p;
    for (int i = 0; i < 6; ++i) {
        p[static_cast<std::size_t>(i)] = static_cast<double>(v[static_cast<std::size_t>(i)]);
    }
    return p;
}

/// Euclidean projection of a point onto the convex hull of a vertex set.
struct HullProjection {
    double distance = 0.0;
    Point6 nearest_point{};
    std::vector<double> weights;  // barycentric, >= 0, sums to 1
    double kkt_residual = 0.0;    // duality gap of the final iterate
    int iterations = 0;
    bool converged = false;
};

struct HullSolverOptions {
    double gap_tol = 1e-15;   // duality-gap stop, objective units
    int max_iterations = 100000;
    double converged_tol = 1e-9;  // reported convergence threshold
};

namespace detail {

// Solve the (n+1)x(n+1) equality-constrained least-squares KKT system for
// weights restricted to a support set. Returns false if the system is close
// to singular or produces a clearly infeasible weight.
inline bool solve_face_weights(const std::vector<Point6> &verts, const std::vector<int> &support,
                               const Point6 &target, std::vector<double> &mu) {
    const std::size_t n = support.size();
    if (n == 0 || n > 7) {
        return false;
    }
    const std::size_t dim = n + 1;
    std::vector<double> m(dim * dim, 0.0);
    std::vector<double> rhs(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Point6 &ri = verts[static_cast<std::size_t>(support[i])];
        for (std::size_t j = 0; j < n; ++j) {
            m[i * dim + j] = 2.0 * dot(ri, verts[static_cast<std::size_t>(support[j])]);
        }
        m[i * dim + n] = 1.0;
        m[n * dim + i] = 1.0;
        rhs[i] = 2.0 * dot(ri, target);
    }
    rhs[n] = 1.0;

    // Gaussian elimination with partial pivoting.
    std::vector<std::size_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        perm[i] = i;
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < dim; ++r) {
            if (std::abs(m[perm[r] * dim + col]) > std::abs(m[perm[best] * dim + col])) {
                best = r;
            }
        }
        std::swap(perm[col], perm[best]);
        const double pivot = m[perm[col] * dim + col];
        if (std::abs(pivot) < 1e-11) {
            return false;
        }
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double factor = m[perm[r] * dim + col] / pivot;
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < dim; ++c) {
                m[perm[r] * dim + c] -= factor * m[perm[col] * dim + c];
            }
            rhs[perm[r]] -= factor * rhs[perm[col]];
        }
    }
    std::vector<double> sol(dim);
    for (std::size_t i = dim; i-- > 0;) {
        double acc = rhs[perm[i]];
        for (std::size_t c = i + 1; c < dim; ++c) {
            acc -= m[perm[i] * dim + c] * sol[c];
        }
        sol[i] = acc / m[perm[i] * dim + i];
    }
    mu.assign(n, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sol[i] < -1e-10) {
            return false;  // leaves the face; keep the iterative solution
        }
        mu[i] = std::max(sol[i], 0.0);
        total += mu[i];
    }
    if (total <= 0.0) {
        return false;
    }
    for (double &w : mu) {
        w /= total;
    }
    return true;
}

}  // namespace detail

/// Nearest point on conv{vertices} to `target`, as a simplex-constrained
/// least-squares problem over barycentric weights:
///
///     minimize ||sum_j w_j r_j - target||^2   s.t.  w >= 0, sum w = 1.
///
/// Solved with away-step Frank-Wolfe (exact line search; the objective is
/// quadratic) plus a direct equality-constrained solve on the identified
/// face to reach machine precision. The duality gap bounds the objective
/// suboptimality and is reported as the KKT residual.
inline HullProjection project_onto_hull(const Point6 &target, const std::vector<Point6> &vertices,
                                        const HullSolverOptions &opts = {}) {
    const std::size_t m = vertices.size();
    std::vector<double> weights(m, 0.0);

    // Warm start on the nearest vertex.
    std::size_t best0 = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
        Point6 d;
        for (int i = 0; i < 6; ++i) {
            d[static_cast<std::size_t>(i)] =
                vertices[j][static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i)];
        }
        const double dd = dot(d, d);
        if (dd < bestd) {
            bestd = dd;
            best0 = j;
        }
    }
    weights[best0] = 1.0;

    auto combine = [&](const std::vector<double> &w) {
        Point6 x{};
        for (std::size_t j = 0; j < m; ++j) {
            if (w[j] == 0.0) {
                continue;
            }
            for (int i = 0; i < 6; ++i) {
                x[static_cast<std::size_t>(i)] += w[j] * vertices[j][static_cast<std::size_t>(i)];
            }
        }
        return x;
    };
    auto objective = [&](const Point6 &x) {
        double f = 0.0;
        for (int i = 0; i < 6; ++i) {
            const double d = x[static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i)];
            f += d * d;
        }
        return f;
    };

    Point6 x = combine(weights);
    std::vector<double> grad(m, 0.0);
    int iter = 0;
    double gap = std::numeric_limits<double>::infinity();
    double gap_best = gap;
    int stalled = 0;

    auto compute_gap = [&]() {
        Point6 resid;
        for (int i = 0; i < 6; ++i) {
            resid[static_cast<std::size_t>(i)] =
                x[static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i)];
        }
        double gdotw = 0.0;
        double gmin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < m; ++j) {
            grad[j] = 2.0 * dot(vertices[j], resid);
            gdotw += grad[j] * weights[j];
            gmin = std::min(gmin, grad[j]);
        }
        return gdotw - gmin;
    };

    auto try_polish = [&]() {
        std::vector<int> support;
        for (std::size_t j = 0; j < m; ++j) {
            if (weights[j] > 1e-10) {
                support.push_back(static_cast<int>(j));
            }
        }
        std::vector<double> mu;
        if (!detail::solve_face_weights(vertices, support, target, mu)) {
            return false;
        }
        std::vector<double> candidate(m, 0.0);
        for (std::size_t k = 0; k < support.size(); ++k) {
            candidate[static_cast<std::size_t>(support[k])] = mu[k];
        }
        const Point6 cx = combine(candidate);
        if (objective(cx) <= objective(x) + 1e-18) {
            weights = candidate;
            x = cx;
            return true;
        }
        return false;
    };

    for (; iter < opts.max_iterations; ++iter) {
        gap = compute_gap();
        if (gap <= opts.gap_tol) {
            break;
        }
        // The gap bottoms out near the rounding floor of the gradient; stop
        // once it has made no headway for a while.
        if (gap < gap_best * (1.0 - 1e-3)) {
            gap_best = gap;
            stalled = 0;
        } else if (++stalled > 512) {
            break;
        }
        if (gap <= 1e-8 && iter % 64 == 0 && try_polish()) {
            gap = compute_gap();
            if (gap <= opts.gap_tol) {
                break;
            }
        }

        std::size_t fw = 0, away = 0;
        double gmin = std::numeric_limits<double>::infinity();
        double gmax = -std::numeric_limits<double>::infinity();
        double gdotw = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            gdotw += grad[j] * weights[j];
            if (grad[j] < gmin) {
                gmin = grad[j];
                fw = j;
            }
            if (weights[j] > 0.0 && grad[j] > gmax) {
                gmax = grad[j];
                away = j;
            }
        }
        const double gap_fw = gdotw - gmin;
        const double gap_away = gmax - gdotw;

        Point6 dir;
        double gamma_max;
        bool is_away;
        if (gap_fw >= gap_away || weights[away] >= 1.0) {
            for (int i = 0; i < 6; ++i) {
                dir[static_cast<std::size_t>(i)] =
                    vertices[fw][static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)];
            }
            gamma_max = 1.0;
            is_away = false;
        } else {
            for (int i = 0; i < 6; ++i) {
                dir[static_cast<std::size_t>(i)] =
                    x[static_cast<std::size_t>(i)] - vertices[away][static_cast<std::size_t>(i)];
            }
            gamma_max = weights[away] / (1.0 - weights[away]);
            is_away = true;
        }

        const double dd = dot(dir, dir);
        if (dd <= 1e-300) {
            break;
        }
        Point6 resid;
        for (int i = 0; i < 6; ++i) {
            resid[static_cast<std::size_t>(i)] =
                x[static_cast<std::size_t>(i)] - target[static_cast<std::size_t>(i)];
        }
        double gamma = -dot(resid, dir) / dd;
        gamma = std::min(gamma, gamma_max);
        if (gamma <= 0.0) {
            break;
        }

        if (is_away) {
            const bool drop = gamma >= gamma_max;
            for (std::size_t j = 0; j < m; ++j) {
                weights[j] *= 1.0 + gamma;
            }
            weights[away] -= gamma;
            if (drop) {
                weights[away] = 0.0;
            }
        } else {
            for (std::size_t j = 0; j < m; ++j) {
                weights[j] *= 1.0 - gamma;
            }
            weights[fw] += gamma;
        }
        x = combine(weights);
    }

    try_polish();

    // Drop numerically dead atoms before reporting.
    double total = 0.0;
    for (double &w : weights) {
        if (w < 1e-12) {
            w = 0.0;
        }
        total += w;
    }
    for (double &w : weights) {
        w /= total;
    }
    x = combine(weights);
    gap = compute_gap();

    HullProjection out;
    out.distance = std::sqrt(std::max(objective(x), 0.0));
    out.nearest_point = x;
    out.weights = std::move(weights);
    out.kkt_residual = gap;
    out.iterations = iter;
    out.converged = gap <= opts.converged_tol;
    return out;
}

/// Distance from `v` to the realism polytope (convex hull of the 32 result
/// vectors reachable by sign squares).
inline HullProjection project_onto_realism_hull(const Point6 &v) {
    static const std::vector<Point6> kVertices = [] {
        std::vector<Point6> verts;
        for (const LineSigns &r : VectorSets::standard().realism) {
            verts.push_back(to_point(r));
        }
        return verts;
    }();
    return project_onto_hull(v, kVertices);
}

inline double hull_distance(const Point6 &v) { return project_onto_realism_hull(v).distance; }

}  // namespace msq
