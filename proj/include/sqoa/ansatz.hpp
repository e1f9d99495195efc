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

#include <array>
#include <cstdint>
#include <numbers>
#include <vector>

#include "sqoa/engine.hpp"
#include "sqoa/optimize.hpp"
#include "sqoa/pauli.hpp"

namespace sqoa {

/// Linear angle schedule: gamma_l = gamma_slope * l / p + gamma_int, likewise
/// for beta, with l = 1..p.
struct LinxferParams {
    double gamma_slope = 0.0;
    double gamma_int = 0.0;
    double beta_slope = 0.0;
    double beta_int = 0.0;

    std::array<double, 4> to_array() const { return {gamma_slope, gamma_int, beta_slope, beta_int}; }
    static LinxferParams from_span(std::span<const double> v);

    friend bool operator==(const LinxferParams&, const LinxferParams&) = default;
};

struct AngleSchedule {
    std::vector<double> gammas;
    std::vector<double> betas;

    int layers() const { return static_cast<int>(gammas.size()); }
    /// gammas followed by betas.
    std::vector<double> flatten() const;
    static AngleSchedule from_flat(std::span<const double> flat);
};

AngleSchedule expand_schedule(const LinxferParams& params, int p);

/// exp(-i b_p H_M) exp(-i g_p H_C) ... exp(-i b_1 H_M) exp(-i g_1 H_C) |psi_0>
/// where |psi_0> is the mixer's initial state.
Statevector prepare_state(const Observable& cost, Mixer mixer, const AngleSchedule& schedule,
                          const ExpmOptions& expm = {});

struct TuneReport {
    std::vector<double> best_params;
    double best_objective = 0.0;
    int evaluations = 0;
    std::vector<TracePoint> trace;
};

inline constexpr double kSearchBound = std::numbers::pi;
inline constexpr int kDefaultTuneBudget = 300;
inline constexpr int kDefaultBaselineBudget = 500;

/// Minimizes <psi(theta)|H_C|psi(theta)> over the LINXFER box [-pi, pi]^4:
/// a design of min(budget / 2, 64) points (up to 12 fixed linear-ramp anchors,
/// the rest Latin hypercube), then Nelder-Mead
/// from the best design point (restarting on convergence) until the budget
/// is spent. Requires budget >= 16.
TuneReport tune_linxfer(const Observable& cost, Mixer mixer, int p, int budget, uint64_t seed);

/// Random Initialization baseline: 2p angles uniform in [-pi, pi], then
/// Nelder-Mead on the full schedule. Requires budget >= 2p + 2.
TuneReport optimize_random_init(const Observable& cost, Mixer mixer, int p, int budget, uint64_t seed);

/// Warm start from the expanded LINXFER schedule, then Nelder-Mead on all 2p
/// angles without the linear constraint.
TuneReport fine_tune(const Observable& cost, Mixer mixer, int p, const LinxferParams& start, int budget,
                     uint64_t seed);

}  // namespace sqoa
