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
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sqoa/pauli.hpp"

// Dense statevector kernels. `serial` is the reference implementation kept for
// testing; `omp` is what the library calls. Both index basis states with qubit 0
// as the least significant bit.
//
// The omp reductions sum fixed-size blocks and then combine the block sums in
// order, so results do not depend on the thread count.

namespace sqoa::kernels {

using cplx = std::complex<double>;

namespace serial {

/// out = (offset I + sum_k c_k P_k) in. `out` must not alias `in`.
void apply_observable(const Observable& h, std::span<const cplx> in, std::span<cplx> out);
/// <v|H|v> without normalization.
cplx expectation(const Observable& h, std::span<const cplx> v);
/// v <- prod_q exp(-i beta P_q) v.
void apply_mixer(PauliAxis axis, double beta, std::span<cplx> v);
/// (<X_q>, <Y_q>, <Z_q>).
std::array<double, 3> single_qubit_expectations(int qubit, std::span<const cplx> v);
/// sum_i conj(a_i) b_i.
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
double norm_sq(std::span<const cplx> a);
/// y += alpha x.
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void scale(cplx alpha, std::span<cplx> x);

}  // namespace serial

namespace omp {

/// An Observable preprocessed for repeated application (sign tables over the
/// low qubits, phases folded into the coefficients).
class PreparedObservable {
   public:
    explicit PreparedObservable(const Observable& h);

    int n_qubits() const { return n_qubits_; }
    /// out = H in; `out` must not alias `in`.
    void apply(std::span<const cplx> in, std::span<cplx> out) const;

   private:
    struct Term {
        uint64_t x_low;
        uint64_t x_high;
        uint64_t z_high;
        bool imaginary;  // coefficient is i times a real number
        size_t table;    // offset of the (+, -) signed tables
    };
    int n_qubits_ = 0;
    int low_bits_ = 0;
    double offset_ = 0.0;
    std::vector<Term> terms_;
    std::vector<double> tables_;
};

void apply_observable(const Observable& h, std::span<const cplx> in, std::span<cplx> out);
cplx expectation(const Observable& h, std::span<const cplx> v);
void apply_mixer(PauliAxis axis, double beta, std::span<cplx> v);
std::array<double, 3> single_qubit_expectations(int qubit, std::span<const cplx> v);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);
double norm_sq(std::span<const cplx> a);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);
void scale(cplx alpha, std::span<cplx> x);

}  // namespace omp

}  // namespace sqoa::kernels
