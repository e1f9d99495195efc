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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sqoa/lanczos.hpp"
#include "sqoa/pauli.hpp"

namespace sqoa {

/// Unit-norm amplitude vector over 2^n_qubits basis states; qubit 0 is the
/// least significant bit of the basis index.
class Statevector {
   public:
    Statevector() = default;
    /// |0...0>.
    explicit Statevector(int n_qubits);

    /// Takes ownership and rescales to unit norm; throws on zero norm or a
    /// length that is not a power of two.
    static Statevector normalized(std::vector<cplx> amplitudes);
    /// Requires | ||amplitudes|| - 1 | <= tol.
    static Statevector from_unit(std::vector<cplx> amplitudes, double tol = 1e-10);
    static Statevector basis(int n_qubits, uint64_t index);

    int n_qubits() const { return n_qubits_; }
    size_t size() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    const cplx& operator[](uint64_t i) const { return amps_[i]; }

   private:
    Statevector(int n_qubits, std::vector<cplx> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    int n_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// Basis index rendered most-significant qubit first.
std::string format_bitstring(uint64_t index, int n_qubits);
uint64_t parse_bitstring(const std::string& bits);

/// X -> |+>^n, Y -> |i>^n = ((|0> + i|1>)/sqrt 2)^n, Z -> |0>^n.
Statevector prepare_initial_state(int n_qubits, Mixer mixer);

/// (offset I + sum c_k P_k) |v>, unnormalized.
std::vector<cplx> apply_observable(const Observable& h, const Statevector& v);

/// Re <v|H|v>. Throws NumericalError if the imaginary part exceeds 1e-10
/// (scaled by the coefficient norm).
double expectation(const Observable& h, const Statevector& v);

inline constexpr int kDefaultKrylovDim = 64;
inline constexpr size_t kKrylovMemoryAmplitudes = size_t{1} << 25;

struct ExpmOptions {
    double tol = 1e-10;
    /// Hard cap on the Krylov dimension of a single step.
    int max_krylov = 200;
    /// Dimension at which a step is cut short; 0 = kDefaultKrylovDim.
    int krylov_dim = 0;
    bool reorthogonalize = false;
};

/// exp(-i t H) |v> by Lanczos (Krylov) approximation. Each step grows a
/// Krylov space up to `krylov_dim` vectors and advances by the largest time
/// whose a-posteriori error estimate fits its share of `tol`. Throws
/// NumericalError when a step cannot advance.
Statevector expm_apply(const Observable& h, double t, const Statevector& v, const ExpmOptions& options = {});

/// prod_q exp(-i beta P_q) |v>; the factors commute so this is exact.
Statevector apply_single_pauli_mixer(Mixer mixer, double beta, const Statevector& v);

struct GroundState {
    double energy = 0.0;
    Statevector state;
    double residual = 0.0;
};

inline constexpr int kDefaultLanczosQubitCap = 20;

/// Smallest eigenvalue of h with a unit eigenvector, residual <= tol.
/// Throws SizeError above `max_qubits`.
GroundState lanczos_ground(const Observable& h, uint64_t seed, double tol = 1e-9,
                           int max_qubits = kDefaultLanczosQubitCap);

struct SampleSet {
    int n_qubits = 0;
    uint64_t shots = 0;
    std::map<uint64_t, uint64_t> counts;  // basis index -> count
};

/// Multinomial draw of `shots` basis states from |amplitude|^2.
SampleSet sample_counts(const Statevector& v, uint64_t shots, uint64_t seed);

}  // namespace sqoa
