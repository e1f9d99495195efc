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

#include "sqoa/encoding.hpp"

#include <cmath>
#include <string>

#include "sqoa/errors.hpp"

namespace sqoa {

EncodingMap build_encoding(const Graph& g, const Coloring& c, int vars_per_qubit) {
    if (vars_per_qubit < 1 || vars_per_qubit > 3) {
        throw ValidationError("vars_per_qubit must be 1, 2 or 3, got " + std::to_string(vars_per_qubit));
    }
    if (!is_proper_coloring(g, c)) {
        throw ValidationError("coloring is not proper for this graph");
    }
    static constexpr PauliAxis kOrder[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

    EncodingMap m;
    m.vars_per_qubit = vars_per_qubit;
    m.slot_of.resize(g.num_vertices());
    int next_qubit = 0;
    for (int color = 0; color < c.num_colors; ++color) {
        int filled = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (c.color_of[v] != color) {
                continue;
            }
            int within = filled % vars_per_qubit;
            PauliAxis axis = vars_per_qubit == 1 ? PauliAxis::Z : kOrder[within];
            m.slot_of[v] = {next_qubit + filled / vars_per_qubit, axis};
            ++filled;
        }
        next_qubit += (filled + vars_per_qubit - 1) / vars_per_qubit;
    }
    m.n_qubits = next_qubit;
    if (m.n_qubits > kMaxQubits) {
        throw SizeError("encoding needs " + std::to_string(m.n_qubits) + " qubits");
    }
    return m;
}

Observable build_relaxed_hamiltonian(const Graph& g, const EncodingMap& m) {
    if (m.num_variables() != g.num_vertices()) {
        throw ValidationError("encoding covers " + std::to_string(m.num_variables()) + " variables, graph has " +
                              std::to_string(g.num_vertices()));
    }
    const double f = static_cast<double>(m.vars_per_qubit);
    Observable h(m.n_qubits, -0.5 * g.num_edges());
    for (const Edge& e : g.edges()) {
        if (m.slot_of[e.u].qubit == m.slot_of[e.v].qubit) {
            throw EncodingError("adjacent variables " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                                " share qubit " + std::to_string(m.slot_of[e.u].qubit));
        }
        h.add_term(0.5 * f, m.pauli_of(e.u).tensor(m.pauli_of(e.v)));
    }
    return h;
}

bool encoding_is_valid(const Graph& g, const Coloring& c, const EncodingMap& m) {
    if (m.num_variables() != g.num_vertices() || m.vars_per_qubit < 1 || m.vars_per_qubit > 3) {
        return false;
    }
    std::vector<int> load(m.n_qubits, 0);
    std::vector<int> axis_used(m.n_qubits, 0);
    for (const QubitSlot& s : m.slot_of) {
        if (s.qubit < 0 || s.qubit >= m.n_qubits) {
            return false;
        }
        int bit = 1 << static_cast<int>(s.axis);
        if (axis_used[s.qubit] & bit) {
            return false;
        }
        axis_used[s.qubit] |= bit;
        if (++load[s.qubit] > m.vars_per_qubit) {
            return false;
        }
    }
    for (const Edge& e : g.edges()) {
        if (m.slot_of[e.u].qubit == m.slot_of[e.v].qubit) {
            return false;
        }
    }
    return m.n_qubits == packed_qubit_count(c, m.vars_per_qubit);
}

Eigen::Matrix2cd pauli_matrix(PauliAxis axis) {
    using C = std::complex<double>;
    Eigen::Matrix2cd p;
    switch (axis) {
        case PauliAxis::X:
            p << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
            break;
        case PauliAxis::Y:
            p << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
            break;
        case PauliAxis::Z:
            p << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
            break;
    }
    return p;
}

Eigen::Matrix2cd qrac_state(bool x1, bool x2, bool x3) {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    auto sign = [](bool bit) { return bit ? -1.0 : 1.0; };
    Eigen::Matrix2cd bloch = sign(x1) * pauli_matrix(PauliAxis::X) + sign(x2) * pauli_matrix(PauliAxis::Y) +
                             sign(x3) * pauli_matrix(PauliAxis::Z);
    return 0.5 * (Eigen::Matrix2cd::Identity() + inv_sqrt3 * bloch);
}

double qrac_decode_probability(const Eigen::Matrix2cd& rho, PauliAxis axis, bool bit) {
    Eigen::Matrix2cd projector = 0.5 * (Eigen::Matrix2cd::Identity() + (bit ? -1.0 : 1.0) * pauli_matrix(axis));
    return (rho * projector).trace().real();
}

}  // namespace sqoa
