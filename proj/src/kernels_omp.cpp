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

#include <omp.h>

#include <algorithm>
#include <bit>
#include <vector>

#include "kernel_terms.hpp"
#include "sqoa/kernels.hpp"

namespace sqoa::kernels::omp {

namespace {

constexpr int64_t kBlock = 4096;
constexpr int64_t kParallelThreshold = 1 << 12;

int64_t num_blocks(size_t n) { return (static_cast<int64_t>(n) + kBlock - 1) / kBlock; }

// Deterministic blocked sum of f(i) over [0, n).
template <typename T, typename F>
T blocked_sum(size_t n, F&& f) {
    const int64_t blocks = num_blocks(n);
    std::vector<T> partial(blocks, T{});
#pragma omp parallel for schedule(static) if (static_cast<int64_t>(n) >= kParallelThreshold)
    for (int64_t b = 0; b < blocks; ++b) {
        const int64_t lo = b * kBlock;
        const int64_t hi = std::min<int64_t>(lo + kBlock, static_cast<int64_t>(n));
        T s{};
        for (int64_t i = lo; i < hi; ++i) {
            s += f(static_cast<uint64_t>(i));
        }
        partial[b] = s;
    }
    T total{};
    for (const T& s : partial) {
        total += s;
    }
    return total;
}

}  // namespace

namespace {

constexpr int kLowBits = 8;

}  // namespace

PreparedObservable::PreparedObservable(const Observable& h)
    : n_qubits_(h.n_qubits()), low_bits_(std::min(kLowBits, h.n_qubits())), offset_(h.offset()) {
    const uint64_t block = uint64_t{1} << low_bits_;
    const uint64_t low_mask = block - 1;
    for (const internal::FlatTerm& t : internal::flatten(h)) {
        const bool imaginary = t.im != 0.0;
        const double c = imaginary ? t.im : t.re;
        const size_t offset = tables_.size();
        tables_.resize(offset + 2 * block);
        for (uint64_t i = 0; i < block; ++i) {
            const double v = c * internal::parity_sign(i & t.z_mask & low_mask);
            tables_[offset + i] = v;
            tables_[offset + block + i] = -v;
        }
        terms_.push_back({t.x_mask & low_mask, t.x_mask >> low_bits_, t.z_mask >> low_bits_, imaginary, offset});
    }
}

// Term-major over destination blocks of 2^low amplitudes: the sign
// (-1)^{|b & z|} is a per-block factor times a per-term table entry.
void PreparedObservable::apply(std::span<const cplx> in, std::span<cplx> out) const {
    const size_t dim = size_t{1} << n_qubits_;
    internal::check_same(in.size(), dim);
    internal::check_same(out.size(), dim);
    const int64_t block = int64_t{1} << low_bits_;
    const int64_t blocks = static_cast<int64_t>(dim) / block;
    const cplx* src_all = in.data();
    cplx* dst_all = out.data();
#pragma omp parallel for schedule(static) if (static_cast<int64_t>(dim) >= kParallelThreshold)
    for (int64_t hb = 0; hb < blocks; ++hb) {
        cplx* dst = dst_all + hb * block;
        const cplx* same = src_all + hb * block;
        for (int64_t i = 0; i < block; ++i) {
            dst[i] = offset_ * same[i];
        }
        for (const Term& t : terms_) {
            const uint64_t src_block = static_cast<uint64_t>(hb) ^ t.x_high;
            const double* f = tables_.data() + t.table + (std::popcount(src_block & t.z_high) & 1 ? block : 0);
            const cplx* src = src_all + static_cast<int64_t>(src_block) * block;
            const int64_t xl = static_cast<int64_t>(t.x_low);
            if (!t.imaginary) {
                if (xl == 0) {
                    for (int64_t i = 0; i < block; ++i) {
                        dst[i] += f[i] * src[i];
                    }
                } else {
                    for (int64_t i = 0; i < block; ++i) {
                        dst[i ^ xl] += f[i] * src[i];
                    }
                }
            } else {
                for (int64_t i = 0; i < block; ++i) {
                    dst[i ^ xl] += cplx(-f[i] * src[i].imag(), f[i] * src[i].real());
                }
            }
        }
    }
}

void apply_observable(const Observable& h, std::span<const cplx> in, std::span<cplx> out) {
    internal::check_dim(h, in.size());
    internal::check_same(in.size(), out.size());
    PreparedObservable(h).apply(in, out);
}

cplx expectation(const Observable& h, std::span<const cplx> v) {
    internal::check_dim(h, v.size());
    std::vector<cplx> hv(v.size());
    apply_observable(h, v, hv);
    return dot(v, hv);
}

void apply_mixer(PauliAxis axis, double beta, std::span<cplx> v) {
    const int64_t n = static_cast<int64_t>(v.size());
    if (axis == PauliAxis::Z) {
        // Diagonal: phase exp(-i beta (#zeros - #ones)).
        int qubits = std::countr_zero(static_cast<uint64_t>(n));
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
        for (int64_t i = 0; i < n; ++i) {
            int ones = std::popcount(static_cast<uint64_t>(i));
            double angle = -beta * static_cast<double>(qubits - 2 * ones);
            v[i] *= cplx(std::cos(angle), std::sin(angle));
        }
        return;
    }
    const internal::Rotation r = internal::mixer_rotation(axis, beta);
    const int64_t half = n / 2;
    for (int64_t bit = 1; bit < n; bit <<= 1) {
        const int64_t low_mask = bit - 1;
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
        for (int64_t k = 0; k < half; ++k) {
            // k with a zero inserted at position log2(bit).
            int64_t i = ((k & ~low_mask) << 1) | (k & low_mask);
            cplx a = v[i];
            cplx b = v[i | bit];
            v[i] = r.m00 * a + r.m01 * b;
            v[i | bit] = r.m10 * a + r.m11 * b;
        }
    }
}

std::array<double, 3> single_qubit_expectations(int qubit, std::span<const cplx> v) {
    internal::check_qubit(qubit, v.size());
    const uint64_t bit = uint64_t{1} << qubit;
    const uint64_t low_mask = bit - 1;
    const cplx* data = v.data();
    struct Acc {
        double x = 0.0, y = 0.0, z = 0.0;
        Acc& operator+=(const Acc& o) {
            x += o.x;
            y += o.y;
            z += o.z;
            return *this;
        }
    };
    Acc total = blocked_sum<Acc>(v.size() / 2, [&](uint64_t k) {
        uint64_t i = ((k & ~low_mask) << 1) | (k & low_mask);
        cplx cross = std::conj(data[i]) * data[i | bit];
        return Acc{2.0 * cross.real(), 2.0 * cross.imag(), std::norm(data[i]) - std::norm(data[i | bit])};
    });
    return {total.x, total.y, total.z};
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    internal::check_same(a.size(), b.size());
    const cplx* pa = a.data();
    const cplx* pb = b.data();
    return blocked_sum<cplx>(a.size(), [&](uint64_t i) { return std::conj(pa[i]) * pb[i]; });
}

double norm_sq(std::span<const cplx> a) {
    const cplx* pa = a.data();
    return blocked_sum<double>(a.size(), [&](uint64_t i) { return std::norm(pa[i]); });
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    internal::check_same(x.size(), y.size());
    const int64_t n = static_cast<int64_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (int64_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void scale(cplx alpha, std::span<cplx> x) {
    const int64_t n = static_cast<int64_t>(x.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (int64_t i = 0; i < n; ++i) {
        x[i] *= alpha;
    }
}

}  // namespace sqoa::kernels::omp
