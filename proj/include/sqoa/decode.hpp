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

#include <string>
#include <vector>

#include "sqoa/encoding.hpp"
#include "sqoa/engine.hpp"
#include "sqoa/graph.hpp"
#include "sqoa/qsci.hpp"

namespace sqoa {

/// Goemans-Williamson guaranteed MaxCut ratio, used as a reference line.
inline constexpr double kGoemansWilliamsonRatio = 0.878;

inline constexpr double kDefaultTieThreshold = 1e-9;

struct SpinSolution {
    std::vector<int> spins;            // +1 / -1 per variable
    std::vector<double> expectations;  // <P_i> that decided each spin
    int cut_value = 0;
    int ties = 0;  // variables with |<P_i>| <= threshold, set to +1
};

/// s_i = sign(<v|P_i|v>) with P_i the variable's (qubit, axis); values within
/// `tie_threshold` of zero become +1 and are counted as ties.
SpinSolution pauli_round(const Statevector& v, const EncodingMap& m, const Graph& g,
                         double tie_threshold = kDefaultTieThreshold);

/// Spin +1 <-> bit 0, written vertex 0 first.
std::string spins_to_bits(const std::vector<int>& spins);

struct Oracles {
    double e_min = 0.0;      // exact ground energy of the relaxed Hamiltonian
    int c_opt = 0;           // maximum cut (certified or best found)
    bool certified = false;  // c_opt from exhaustive enumeration
};

struct Metrics {
    double alpha_r = 0.0;  // energy / e_min
    double alpha_c = 0.0;  // cut / c_opt
    double e_min = 0.0;
    double energy = 0.0;
    int c_opt = 0;
    int cut = 0;
    bool certified_c_opt = false;
    int ties = 0;
};

/// Ratios from raw numerators; throws DomainError for a zero denominator.
Metrics make_metrics(double energy, int cut, int ties, const Oracles& oracles);

/// Metrics of a prepared state: energy <psi|H|psi>, cut from Pauli rounding.
Metrics compute_metrics(const Graph& g, const Observable& h, const Statevector& v, const EncodingMap& m,
                        const Oracles& oracles);

/// Metrics of a QSCI result: energy E_R, cut from rounding the lifted state.
Metrics compute_metrics(const Graph& g, const Observable& h, const QsciResult& result, const EncodingMap& m,
                        const Oracles& oracles);

}  // namespace sqoa
