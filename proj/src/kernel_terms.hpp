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
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "sqoa/errors.hpp"
#include "sqoa/pauli.hpp"

namespace sqoa::kernels::internal {

// A term with its i^{#Y} phase folded into the coefficient. The folded
// coefficient is purely real or purely imaginary.
struct FlatTerm {
    uint64_t x_mask;
    uint64_t z_mask;
    double re;
    double im;
};

inline std::vector<FlatTerm> flatten(const Observable& h) {
    std::vector<FlatTerm> out;
    out.reserve(h.terms().size());
    for (const PauliTerm& t : h.terms()) {
        std::complex<double> c = t.coeff * t.pauli.y_phase();
        out.push_back({t.pauli.x_mask, t.pauli.z_mask, c.real(), c.imag()});
    }
    return out;
}

inline double parity_sign(uint64_t bits) { return (std::popcount(bits) & 1) ? -1.0 : 1.0; }

// (H v)_j, offset excluded.
inline void check_dim(const Observable& h, size_t size) {
    if (size != (size_t{1} << h.n_qubits())) {
        throw ValidationError("vector length " + std::to_string(size) + " does not match 2^" +
                              std::to_string(h.n_qubits()));
    }
}

inline void check_same(size_t a, size_t b) {
    if (a != b) {
        throw ValidationError("vector length mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

inline void check_qubit(int qubit, size_t size) {
    if (qubit < 0 || qubit >= 63 || (size_t{1} << qubit) >= size) {
        throw ValidationError("qubit " + std::to_string(qubit) + " outside statevector");
    }
}

// 2x2 rotation exp(-i beta P) as row-major entries.
struct Rotation {
    std::complex<double> m00, m01, m10, m11;
};

inline Rotation mixer_rotation(PauliAxis axis, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    switch (axis) {
        case PauliAxis::X:
            return {{c, 0}, {0, -s}, {0, -s}, {c, 0}};
        case PauliAxis::Y:
            return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
        case PauliAxis::Z:
            break;
    }
    return {{c, -s}, {0, 0}, {0, 0}, {c, s}};
}

}  // namespace sqoa::kernels::internal
