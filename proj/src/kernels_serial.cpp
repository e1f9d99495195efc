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

#include "kernel_terms.hpp"
#include "sqoa/kernels.hpp"

namespace sqoa::kernels::serial {

using internal::FlatTerm;

void apply_observable(const Observable& h, std::span<const cplx> in, std::span<cplx> out) {
    internal::check_dim(h, in.size());
    internal::check_same(in.size(), out.size());
    // Scatter form, term by term: P|b> = phase(b) |b ^ x>.
    for (size_t j = 0; j < in.size(); ++j) {
        out[j] = h.offset() * in[j];
    }
    for (const PauliTerm& t : h.terms()) {
        cplx c = t.coeff * t.pauli.y_phase();
        for (uint64_t b = 0; b < in.size(); ++b) {
            out[b ^ t.pauli.x_mask] += c * internal::parity_sign(b & t.pauli.z_mask) * in[b];
        }
    }
}

cplx expectation(const Observable& h, std::span<const cplx> v) {
    internal::check_dim(h, v.size());
    std::vector<cplx> hv(v.size());
    apply_observable(h, v, hv);
    return dot(v, hv);
}

void apply_mixer(PauliAxis axis, double beta, std::span<cplx> v) {
    const internal::Rotation r = internal::mixer_rotation(axis, beta);
    for (size_t bit = 1; bit < v.size(); bit <<= 1) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i & bit) {
                continue;
            }
            cplx a = v[i];
            cplx b = v[i | bit];
            v[i] = r.m00 * a + r.m01 * b;
            v[i | bit] = r.m10 * a + r.m11 * b;
        }
    }
}

std::array<double, 3> single_qubit_expectations(int qubit, std::span<const cplx> v) {
    internal::check_qubit(qubit, v.size());
    const size_t bit = size_t{1} << qubit;
    double x = 0.0, y = 0.0, z = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i & bit) {
            continue;
        }
        cplx cross = std::conj(v[i]) * v[i | bit];
        x += 2.0 * cross.real();
        y += 2.0 * cross.imag();
        z += std::norm(v[i]) - std::norm(v[i | bit]);
    }
    return {x, y, z};
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    internal::check_same(a.size(), b.size());
    cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm_sq(std::span<const cplx> a) {
    double s = 0.0;
    for (const cplx& z : a) {
        s += std::norm(z);
    }
    return s;
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    internal::check_same(x.size(), y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

void scale(cplx alpha, std::span<cplx> x) {
    for (cplx& z : x) {
        z *= alpha;
    }
}

}  // namespace sqoa::kernels::serial
