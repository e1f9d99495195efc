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
#include <vector>

#include <Eigen/Core>

#include "sqoa/engine.hpp"

namespace sqoa {

/// Ordered set of distinct basis states spanning the QSCI subspace.
struct Subspace {
    std::vector<uint64_t> basis;
    int n_qubits = 0;
    int requested = 0;

    int size() const { return static_cast<int>(basis.size()); }
    /// Fewer distinct states were available than requested.
    bool shortfall() const { return size() < requested; }
};

/// The r most frequent bitstrings, count ties broken by ascending basis
/// index. Returns all sampled strings (shortfall) when fewer than r exist.
Subspace select_subspace(const SampleSet& samples, int r);

/// Noise-free variant: the r basis states of largest |amplitude|^2, ties by
/// ascending index, zero-probability states excluded.
Subspace select_subspace_exact(const Statevector& v, int r);

/// <x_i|H|x_j> restricted to a subspace, stored row-wise (CSR).
class EffectiveHamiltonian {
   public:
    struct Entry {
        int col;
        cplx value;
    };

    EffectiveHamiltonian() = default;
    EffectiveHamiltonian(Subspace subspace, std::vector<std::vector<Entry>> rows);

    int dim() const { return subspace_.size(); }
    const Subspace& subspace() const { return subspace_; }
    /// Entries of row i sorted by column.
    std::span<const Entry> row(int i) const;
    size_t nonzeros() const { return values_.size(); }

    void apply(std::span<const cplx> x, std::span<cplx> y) const;
    Eigen::MatrixXcd dense() const;

   private:
    Subspace subspace_;
    std::vector<size_t> row_start_;
    std::vector<Entry> values_;
};

/// H_R = P_R H P_R. Each Pauli term maps basis state x to x ^ x_mask, so an
/// entry exists only if that partner is in the subspace. The upper triangle is
/// computed and mirrored, making the result Hermitian by construction.
EffectiveHamiltonian build_effective_hamiltonian(const Observable& h, const Subspace& s);

struct QsciResult {
    double energy = 0.0;
    std::vector<cplx> coefficients;  // unit norm, one per subspace basis state
    Subspace subspace;
    double residual = 0.0;
};

inline constexpr int kDenseQsciLimit = 1024;

/// Lowest eigenpair of H_R: dense solver up to 1024 states, Lanczos above.
QsciResult qsci_ground(const EffectiveHamiltonian& h_eff, uint64_t seed, double tol = 1e-9);

/// Embeds the subspace ground state into the full 2^n_qubits space.
Statevector lift_to_statevector(const QsciResult& result, int n_qubits);

}  // namespace sqoa
