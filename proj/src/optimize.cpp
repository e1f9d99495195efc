// Copyright 2026 The SQOA Authors
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

#include "sqoa/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "sqoa/errors.hpp"

namespace sqoa {

Box Box::cube(size_t dim, double lo, double hi) {
    return Box{std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
}

std::vector<double> Box::project(std::span<const double> x) const {
    std::vector<double> out(x.begin(), x.end());
    for (size_t i = 0; i < out.size() && i < lower.size(); ++i) {
        out[i] = std::clamp(out[i], lower[i], upper[i]);
    }
    return out;
}

double BudgetedObjective::operator()(std::span<const double> x) {
    if (exhausted()) {
        throw ValidationError("objective budget exhausted");
    }
    double value = f_(x);
    trace_.push_back({std::vector<double>(x.begin(), x.end()), value});
    if (trace_.size() == 1 || value < trace_[best_index_].objective) {
        best_index_ = trace_.size() - 1;
    }
    return value;
}

const TracePoint& BudgetedObjective::best() const {
    if (trace_.empty()) {
        throw ValidationError("no evaluations recorded");
    }
    return trace_[best_index_];
}

std::vector<std::vector<double>> latin_hypercube(int points, const Box& box, Rng& rng) {
    const size_t dim = box.dim();
    std::vector<std::vector<double>> out(points, std::vector<double>(dim));
    std::vector<int> strata(points);
    for (size_t d = 0; d < dim; ++d) {
        std::iota(strata.begin(), strata.end(), 0);
        shuffle(std::span<int>(strata), rng);
        const double width = (box.upper[d] - box.lower[d]) / points;
        for (int i = 0; i < points; ++i) {
            out[i][d] = box.lower[d] + width * (strata[i] + uniform01(rng));
        }
    }
    return out;
}

namespace {

std::atomic<uint64_t> g_nelder_mead_calls{0};

struct Vertex {
    std::vector<double> x;
    double f;
};

}  // namespace

uint64_t nelder_mead_invocations() { return g_nelder_mead_calls.load(); }

TracePoint nelder_mead(BudgetedObjective& objective, std::vector<double> start, const NelderMeadOptions& options,
                       const Box* box) {
    g_nelder_mead_calls.fetch_add(1);
    const size_t n = start.size();
    if (n == 0) {
        throw ValidationError("Nelder-Mead needs at least one parameter");
    }
    auto eval = [&](std::vector<double> x) -> Vertex {
        if (box) {
            x = box->project(x);
        }
        double f = objective(x);
        return {std::move(x), f};
    };

    TracePoint best_seen;
    best_seen.objective = INFINITY;
    auto note = [&](const Vertex& v) {
        if (v.f < best_seen.objective) {
            best_seen = {v.x, v.f};
        }
    };

    double step = options.initial_step;
    std::vector<double> origin = std::move(start);
    while (!objective.exhausted()) {
        std::vector<Vertex> simplex;
        simplex.push_back(eval(origin));
        note(simplex.back());
        for (size_t i = 0; i < n && !objective.exhausted(); ++i) {
            std::vector<double> x = simplex[0].x;
            x[i] += step;
            if (box && x[i] > box->upper[i]) {
                x[i] = simplex[0].x[i] - step;
            }
            simplex.push_back(eval(std::move(x)));
            note(simplex.back());
        }
        if (simplex.size() < n + 1) {
            break;
        }

        auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
        bool converged = false;
        while (!objective.exhausted()) {
            std::stable_sort(simplex.begin(), simplex.end(), by_value);
            double spread = simplex[n].f - simplex[0].f;
            double size = 0.0;
            for (size_t i = 1; i <= n; ++i) {
                for (size_t d = 0; d < n; ++d) {
                    size = std::max(size, std::abs(simplex[i].x[d] - simplex[0].x[d]));
                }
            }
            if (spread <= options.ftol && size <= options.xtol) {
                converged = true;
                break;
            }
            if (size <= 1e-14) {
                converged = true;
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (size_t i = 0; i < n; ++i) {
                for (size_t d = 0; d < n; ++d) {
                    centroid[d] += simplex[i].x[d] / static_cast<double>(n);
                }
            }
            auto along = [&](double t) {
                std::vector<double> x(n);
                for (size_t d = 0; d < n; ++d) {
                    x[d] = centroid[d] + t * (simplex[n].x[d] - centroid[d]);
                }
                return x;
            };

            Vertex reflected = eval(along(-1.0));
            note(reflected);
            if (reflected.f < simplex[0].f) {
                if (objective.exhausted()) {
                    simplex[n] = std::move(reflected);
                    break;
                }
                Vertex expanded = eval(along(-2.0));
                note(expanded);
                simplex[n] = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
                continue;
            }
            if (reflected.f < simplex[n - 1].f) {
                simplex[n] = std::move(reflected);
                continue;
            }
            if (objective.exhausted()) {
                break;
            }
            bool outside = reflected.f < simplex[n].f;
            Vertex contracted = eval(along(outside ? -0.5 : 0.5));
            note(contracted);
            if (contracted.f < (outside ? reflected.f : simplex[n].f)) {
                simplex[n] = std::move(contracted);
                continue;
            }
            // Shrink toward the best vertex.
            for (size_t i = 1; i <= n && !objective.exhausted(); ++i) {
                std::vector<double> x(n);
                for (size_t d = 0; d < n; ++d) {
                    x[d] = simplex[0].x[d] + 0.5 * (simplex[i].x[d] - simplex[0].x[d]);
                }
                simplex[i] = eval(std::move(x));
                note(simplex[i]);
            }
        }
        if (!converged || !options.restart_until_budget) {
            break;
        }
        origin = best_seen.params;
        step *= 0.5;
        if (step < options.xtol) {
            break;
        }
    }
    if (!std::isfinite(best_seen.objective)) {
        throw ValidationError("Nelder-Mead made no evaluation (budget exhausted on entry)");
    }
    return best_seen;
}

}  // namespace sqoa
