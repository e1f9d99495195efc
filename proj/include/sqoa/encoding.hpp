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

#include <vector>

#include <Eigen/Core>

#include "sqoa/graph.hpp"
#include "sqoa/pauli.hpp"

namespace sqoa {

struct QubitSlot {
    int qubit = 0;
    PauliAxis axis = PauliAxis::Z;

    friend bool operator==(const QubitSlot&, const QubitSlot&) = default;
};

/// Variable -> (qubit, axis) packing. Variables of one color class share
/// qubits, at most `vars_per_qubit` per qubit and never two on the same axis.
struct EncodingMap {
    std::vector<QubitSlot> slot_of;
    int n_qubits = 0;
    int vars_per_qubit = 3;

    int num_variables() const { return static_cast<int>(slot_of.size()); }
    PauliString pauli_of(int variable) const {
        return PauliString::single(n_qubits, slot_of[variable].qubit, slot_of[variable].axis);
    }
};

/// Packs each color class into ceil(|V_c| / k) qubits. Within a class,
/// vertices are taken in index order and fill axes X, Y, Z of a qubit in turn
/// (k = 1 uses Z only, reproducing the Ising encoding). Throws ValidationError
/// on an improper coloring or k outside {1, 2, 3}.
EncodingMap build_encoding(const Graph& g, const Coloring& c, int vars_per_qubit);

/// -sum_{(i,j) in E} (1 - k P_i P_j) / 2 as offset -|E|/2 plus one +k/2 term
/// per edge. Throws EncodingError if an edge has both endpoints on one qubit.
Observable build_relaxed_hamiltonian(const Graph& g, const EncodingMap& m);

/// Checks every EncodingMap invariant against its source graph and coloring.
bool encoding_is_valid(const Graph& g, const Coloring& c, const EncodingMap& m);

/// (3,1)-QRAC density matrix (I + ((-1)^x1 X + (-1)^x2 Y + (-1)^x3 Z) / sqrt 3) / 2.
Eigen::Matrix2cd qrac_state(bool x1, bool x2, bool x3);

/// Probability Tr[rho (I + (-1)^bit P) / 2] of decoding `bit` along `axis`.
double qrac_decode_probability(const Eigen::Matrix2cd& rho, PauliAxis axis, bool bit);

Eigen::Matrix2cd pauli_matrix(PauliAxis axis);

}  // namespace sqoa
