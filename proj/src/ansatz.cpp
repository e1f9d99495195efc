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

#include "sqoa/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sqoa/errors.hpp"

namespace sqoa {

LinxferParams LinxferParams::from_span(std::span<const double> v) {
    if (v.size() != 4) {
        throw ValidationError("LINXFER parameters need exactly 4 values, got " + std::to_string(v.size()));
    }
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw ValidationError("LINXFER parameters must be finite");
        }
    }
    return {v[0], v[1], v[2], v[3]};
}

std::vector<double> AngleSchedule::flatten() const {
    std::vector<double> out(gammas);
    out.insert(out.end(), betas.begin(), betas.end());
    return out;
}

AngleSchedule AngleSchedule::from_flat(std::span<const double> flat) {
    if (flat.empty() || flat.size() % 2 != 0) {
        throw ValidationError("flat schedule must hold 2p angles");
    }
    const size_t p = flat.size() / 2;
    return {std::vector<double>(flat.begin(), flat.begin() + p), std::vector<double>(flat.begin() + p, flat.end())};
}

AngleSchedule expand_schedule(const LinxferParams& params, int p) {
    if (p < 1) {
        throw ValidationError("layer count p must be >= 1");
    }
    AngleSchedule s;
    s.gammas.reserve(p);
    s.betas.reserve(p);
    for (int l = 1; l <= p; ++l) {
        double frac = static_cast<double>(l) / p;
        s.gammas.push_back(params.gamma_slope * frac + params.gamma_int);
        s.betas.push_back(params.beta_slope * frac + params.beta_int);
    }
    return s;
}

Statevector prepare_state(const Observable& cost, Mixer mixer, const AngleSchedule& schedule, const ExpmOptions& expm) {
    if (schedule.gammas.size() != schedule.betas.size() || schedule.gammas.empty()) {
        throw ValidationError("schedule needs p >= 1 gammas and betas of equal length");
    }
    Statevector state = prepare_initial_state(cost.n_qubits(), mixer);
    for (int l = 0; l < schedule.layers(); ++l) {
        state = expm_apply(cost, schedule.gammas[l], state, expm);
        state = apply_single_pauli_mixer(mixer, schedule.betas[l], state);
    }
    return state;
}

namespace {

TuneReport make_report(const BudgetedObjective& objective) {
    const TracePoint& best = objective.best();
    return {best.params, best.objective, objective.evaluations(), objective.trace()};
}

// Annealing-like ramps: gamma grows from 0, beta shrinks towards 0.
std::vector<std::vector<double>> ramp_anchors() {
    std::vector<std::vector<double>> out;
    for (double dg : {0.1, 0.2, 0.4}) {
        for (double db : {0.4, 0.8}) {
            for (double sign : {1.0, -1.0}) {
                out.push_back({dg, 0.0, sign * db, -sign * db});
            }
        }
    }
    return out;
}

}  // namespace

TuneReport tune_linxfer(const Observable& cost, Mixer mixer, int p, int budget, uint64_t seed) {
    if (budget < 16) {
        throw ValidationError("LINXFER tuning budget must be >= 16");
    }
    if (p < 1) {
        throw ValidationError("layer count p must be >= 1");
    }
    const Box box = Box::cube(4, -kSearchBound, kSearchBound);
    BudgetedObjective objective(
        [&](std::span<const double> x) {
            return expectation(cost, prepare_state(cost, mixer, expand_schedule(LinxferParams::from_span(x), p)));
        },
        budget);

    Rng rng(seed);
    const int design = std::min(budget / 2, 64);
    std::vector<std::vector<double>> anchors = ramp_anchors();
    anchors.resize(std::min<size_t>(anchors.size(), design / 2));
    for (const auto& point : anchors) {
        objective(point);
    }
    for (const auto& point : latin_hypercube(design - static_cast<int>(anchors.size()), box, rng)) {
        objective(point);
    }
    NelderMeadOptions nm;
    nm.initial_step = 0.2;
    nm.restart_until_budget = true;
    nelder_mead(objective, objective.best().params, nm, &box);
    return make_report(objective);
}

TuneReport optimize_random_init(const Observable& cost, Mixer mixer, int p, int budget, uint64_t seed) {
    if (p < 1) {
        throw ValidationError("layer count p must be >= 1");
    }
    if (budget < 2 * p + 2) {
        throw ValidationError("random-init budget must be >= 2p + 2");
    }
    BudgetedObjective objective(
        [&](std::span<const double> x) {
            return expectation(cost, prepare_state(cost, mixer, AngleSchedule::from_flat(x)));
        },
        budget);
    Rng rng(seed);
    std::vector<double> start(2 * p);
    for (double& a : start) {
        a = uniform_real(rng, -kSearchBound, kSearchBound);
    }
    NelderMeadOptions nm;
    nm.initial_step = 0.5;
    nelder_mead(objective, std::move(start), nm);
    return make_report(objective);
}

TuneReport fine_tune(const Observable& cost, Mixer mixer, int p, const LinxferParams& start, int budget,
                     uint64_t seed) {
    if (budget < 1) {
        throw ValidationError("fine-tune budget must be >= 1");
    }
    BudgetedObjective objective(
        [&](std::span<const double> x) {
            return expectation(cost, prepare_state(cost, mixer, AngleSchedule::from_flat(x)));
        },
        budget);
    // The seed only breaks the symmetry of the initial simplex orientation.
    Rng rng(seed);
    NelderMeadOptions nm;
    nm.initial_step = 0.1 * (1.0 + 0.1 * uniform01(rng));
    nelder_mead(objective, expand_schedule(start, p).flatten(), nm);
    return make_report(objective);
}

}  // namespace sqoa
