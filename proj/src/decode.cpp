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

#include "sqoa/decode.hpp"

#include <cmath>

#include "sqoa/errors.hpp"
#include "sqoa/kernels.hpp"

namespace sqoa {

SpinSolution pauli_round(const Statevector& v, const EncodingMap& m, const Graph& g, double tie_threshold) {
    if (v.n_qubits() != m.n_qubits) {
        throw ValidationError("state width does not match the encoding");
    }
    if (m.num_variables() != g.num_vertices()) {
        throw ValidationError("encoding does not match the graph");
    }
    // One pass per qubit yields all three axis expectations.
    std::vector<std::array<double, 3>> per_qubit(m.n_qubits);
    for (int q = 0; q < m.n_qubits; ++q) {
        per_qubit[q] = kernels::omp::single_qubit_expectations(q, v.amplitudes());
    }
    SpinSolution out;
    out.spins.resize(m.num_variables());
    out.expectations.resize(m.num_variables());
    for (int i = 0; i < m.num_variables(); ++i) {
        double e = per_qubit[m.slot_of[i].qubit][static_cast<int>(m.slot_of[i].axis)];
        out.expectations[i] = e;
        if (e > tie_threshold) {
            out.spins[i] = 1;
        } else if (e < -tie_threshold) {
            out.spins[i] = -1;
        } else {
            out.spins[i] = 1;
            ++out.ties;
        }
    }
    out.cut_value = cut_value(g, out.spins);
    return out;
}

std::string spins_to_bits(const std::vector<int>& spins) {
    std::string bits(spins.size(), '0');
    for (size_t i = 0; i < spins.size(); ++i) {
        bits[i] = spins[i] > 0 ? '0' : '1';
    }
    return bits;
}

Metrics make_metrics(double energy, int cut, int ties, const Oracles& oracles) {
    if (oracles.e_min == 0.0) {
        throw DomainError("e_min is zero; alpha_r undefined (graph without edges?)");
    }
    if (oracles.c_opt == 0) {
        throw DomainError("c_opt is zero; alpha_c undefined (graph without edges?)");
    }
    Metrics m;
    m.energy = energy;
    m.e_min = oracles.e_min;
    m.cut = cut;
    m.c_opt = oracles.c_opt;
    m.certified_c_opt = oracles.certified;
    m.ties = ties;
    m.alpha_r = energy / oracles.e_min;
    m.alpha_c = static_cast<double>(cut) / static_cast<double>(oracles.c_opt);
    return m;
}

Metrics compute_metrics(const Graph& g, const Observable& h, const Statevector& v, const EncodingMap& m,
                        const Oracles& oracles) {
    SpinSolution s = pauli_round(v, m, g);
    return make_metrics(expectation(h, v), s.cut_value, s.ties, oracles);
}

Metrics compute_metrics(const Graph& g, const Observable& h, const QsciResult& result, const EncodingMap& m,
                        const Oracles& oracles) {
    if (h.n_qubits() != m.n_qubits) {
        throw ValidationError("observable width does not match the encoding");
    }
    SpinSolution s = pauli_round(lift_to_statevector(result, m.n_qubits), m, g);
    return make_metrics(result.energy, s.cut_value, s.ties, oracles);
}

}  // namespace sqoa
