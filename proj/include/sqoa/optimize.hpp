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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sqoa/random.hpp"

namespace sqoa {

struct TracePoint {
    std::vector<double> params;
    double objective = 0.0;
};

/// Axis-aligned box; points outside are projected onto it before evaluation.
struct Box {
    std::vector<double> lower;
    std::vector<double> upper;

    static Box cube(size_t dim, double lo, double hi);
    size_t dim() const { return lower.size(); }
    std::vector<double> project(std::span<const double> x) const;
};

/// Wraps an objective with an evaluation budget and records every call.
class BudgetedObjective {
   public:
    using Function = std::function<double(std::span<const double>)>;

    BudgetedObjective(Function f, int budget) : f_(std::move(f)), budget_(budget) {}

    bool exhausted() const { return evaluations() >= budget_; }
    int evaluations() const { return static_cast<int>(trace_.size()); }
    int remaining() const { return budget_ - evaluations(); }
    int budget() const { return budget_; }

    /// Evaluates and records; precondition: !exhausted().
    double operator()(std::span<const double> x);

    const std::vector<TracePoint>& trace() const { return trace_; }
    /// First point reaching the minimum objective.
    const TracePoint& best() const;

   private:
    Function f_;
    int budget_;
    std::vector<TracePoint> trace_;
    size_t best_index_ = 0;
};

/// `points` samples with exactly one point per stratum along every axis.
std::vector<std::vector<double>> latin_hypercube(int points, const Box& box, Rng& rng);

struct NelderMeadOptions {
    double initial_step = 0.25;
    double ftol = 1e-10;  // stop when the simplex values spread less than this
    double xtol = 1e-8;   // ... and the simplex is smaller than this
    /// Restart around the best point with a halved step after convergence
    /// while budget remains.
    bool restart_until_budget = false;
};

/// Derivative-free simplex descent from `start` (standard coefficients 1, 2,
/// 1/2, 1/2). Stops on convergence or when the budget runs out. With a box,
/// every trial point is projected onto it. Returns the best point seen by
/// this call.
/// Process-wide count of nelder_mead calls (diagnostic).
uint64_t nelder_mead_invocations();

TracePoint nelder_mead(BudgetedObjective& objective, std::vector<double> start, const NelderMeadOptions& options,
                       const Box* box = nullptr);

}  // namespace sqoa
