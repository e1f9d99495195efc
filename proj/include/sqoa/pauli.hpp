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

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqoa {

enum class PauliAxis : uint8_t { X, Y, Z };

/// Single-Pauli mixers are named by the axis they apply to every qubit.
using Mixer = PauliAxis;

char axis_char(PauliAxis a);
PauliAxis parse_axis(std::string_view s);

inline constexpr int kMaxQubits = 62;

/// Symplectic Pauli string. Qubit q carries X if bit q of x_mask is set, Z if
/// bit q of z_mask is set, Y if both. Acting on a basis state,
///   P|b> = i^{#Y} (-1)^{popcount(b & z_mask)} |b ^ x_mask>.
struct PauliString {
    uint64_t x_mask = 0;
    uint64_t z_mask = 0;
    int width = 0;

    static PauliString identity(int width);
    static PauliString single(int width, int qubit, PauliAxis axis);
    /// Label is most-significant qubit first: "XIZ" puts X on qubit 2, Z on qubit 0.
    static PauliString from_label(std::string_view label);

    std::string label() const;
    bool is_identity() const { return x_mask == 0 && z_mask == 0; }
    int y_count() const { return std::popcount(x_mask & z_mask); }
    /// i^{#Y}.
    std::complex<double> y_phase() const;

    /// Product of two strings acting on disjoint qubits.
    PauliString tensor(const PauliString& other) const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// True iff a and b commute: the number of qubits where both act with
/// different non-identity Paulis is even. Throws ValidationError on width mismatch.
bool strings_commute(const PauliString& a, const PauliString& b);

struct PauliTerm {
    double coeff = 0.0;
    PauliString pauli;
};

/// offset * I + sum_k coeff_k P_k with real coefficients, hence Hermitian.
/// Equal strings are merged on insertion; identity strings fold into the offset.
class Observable {
   public:
    Observable() = default;
    explicit Observable(int n_qubits, double offset = 0.0);

    void add_term(double coeff, const PauliString& pauli);
    void add_offset(double value);

    int n_qubits() const { return n_qubits_; }
    double offset() const { return offset_; }
    std::span<const PauliTerm> terms() const { return terms_; }
    /// sum_k |coeff_k|; bounds the spectral radius of the non-offset part.
    double coefficient_norm() const;

   private:
    int n_qubits_ = 0;
    double offset_ = 0.0;
    std::vector<PauliTerm> terms_;
    std::map<std::pair<uint64_t, uint64_t>, size_t> index_;
};

/// sum_q P_q with unit coefficients; the single-Pauli mixer Hamiltonian.
Observable uniform_pauli_sum(int n_qubits, PauliAxis axis);

}  // namespace sqoa
