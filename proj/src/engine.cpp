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

#include "sqoa/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "sqoa/errors.hpp"
#include "sqoa/kernels.hpp"
#include "sqoa/random.hpp"

namespace sqoa {

namespace k = kernels::omp;

namespace {

int qubits_for_length(size_t n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ValidationError("amplitude count " + std::to_string(n) + " is not a power of two");
    }
    return std::countr_zero(n);
}

void check_width(const Observable& h, const Statevector& v) {
    if (h.n_qubits() != v.n_qubits()) {
        throw ValidationError("observable acts on " + std::to_string(h.n_qubits()) + " qubits, state has " +
                              std::to_string(v.n_qubits()));
    }
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxQubits) {
        throw ValidationError("qubit count out of range");
    }
    amps_.assign(size_t{1} << n_qubits, cplx(0.0));
    amps_[0] = 1.0;
}

Statevector Statevector::normalized(std::vector<cplx> amplitudes) {
    int n = qubits_for_length(amplitudes.size());
    double norm = std::sqrt(k::norm_sq(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw NumericalError("cannot normalize a zero or non-finite vector");
    }
    k::scale(1.0 / norm, amplitudes);
    return Statevector(n, std::move(amplitudes));
}

Statevector Statevector::from_unit(std::vector<cplx> amplitudes, double tol) {
    int n = qubits_for_length(amplitudes.size());
    double norm = std::sqrt(k::norm_sq(amplitudes));
    if (std::abs(norm - 1.0) > tol) {
        throw ValidationError("statevector norm " + std::to_string(norm) + " differs from 1");
    }
    return Statevector(n, std::move(amplitudes));
}

Statevector Statevector::basis(int n_qubits, uint64_t index) {
    Statevector s(n_qubits);
    if (index >= s.size()) {
        throw ValidationError("basis index outside the state space");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

std::string format_bitstring(uint64_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1ULL) {
            s[n_qubits - 1 - q] = '1';
        }
    }
    return s;
}

uint64_t parse_bitstring(const std::string& bits) {
    if (bits.empty() || bits.size() > 64) {
        throw ValidationError("bitstring length must be in [1, 64]");
    }
    uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ValidationError("bitstring may only contain 0 and 1: '" + bits + "'");
        }
        index = (index << 1) | static_cast<uint64_t>(c == '1');
    }
    return index;
}

Statevector prepare_initial_state(int n_qubits, Mixer mixer) {
    if (n_qubits < 1) {
        throw ValidationError("initial state needs at least one qubit");
    }
    Statevector zero(n_qubits);
    if (mixer == Mixer::Z) {
        return zero;
    }
    const size_t dim = size_t{1} << n_qubits;
    const double amp = std::pow(0.5, 0.5 * n_qubits);
    static constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<cplx> amps(dim);
    for (size_t b = 0; b < dim; ++b) {
        amps[b] = mixer == Mixer::X ? cplx(amp) : amp * kIPowers[std::popcount(b) & 3];
    }
    return Statevector::from_unit(std::move(amps));
}

std::vector<cplx> apply_observable(const Observable& h, const Statevector& v) {
    check_width(h, v);
    std::vector<cplx> out(v.size());
    k::apply_observable(h, v.amplitudes(), out);
    return out;
}

double expectation(const Observable& h, const Statevector& v) {
    check_width(h, v);
    cplx e = k::expectation(h, v.amplitudes());
    double scale = std::max(1.0, h.coefficient_norm() + std::abs(h.offset()));
    if (std::abs(e.imag()) > 1e-10 * scale) {
        throw NumericalError("expectation has imaginary part " + std::to_string(e.imag()));
    }
    return e.real();
}

namespace {

// Smallest-eigenvalue Ritz pair of the leading `m` x `m` block of the
// Lanczos tridiagonal matrix.
struct RitzPair {
    double value;
    Eigen::VectorXd vec;
};

RitzPair smallest_ritz(const std::vector<double>& alpha, const std::vector<double>& beta, int m) {
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                                : Eigen::VectorXd(0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

// w -= sum_i <V_i, w> V_i over the first `count` basis vectors.
void orthogonalize(const std::vector<std::vector<cplx>>& basis, size_t count, std::vector<cplx>& w) {
    for (size_t i = 0; i < count; ++i) {
        cplx c = k::dot(basis[i], w);
        k::axpy(-c, basis[i], w);
    }
}

std::vector<cplx> combine(const std::vector<std::vector<cplx>>& basis, const Eigen::Ref<const Eigen::VectorXcd>& y) {
    std::vector<cplx> out(basis[0].size(), cplx(0.0));
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        k::axpy(y(i), basis[i], out);
    }
    return out;
}

std::vector<cplx> random_unit_vector(size_t dim, uint64_t seed) {
    Rng rng(seed);
    std::vector<cplx> v(dim);
    for (cplx& z : v) {
        z = cplx(uniform_real(rng, -1.0, 1.0), uniform_real(rng, -1.0, 1.0));
    }
    double norm = std::sqrt(k::norm_sq(v));
    k::scale(1.0 / norm, v);
    return v;
}

}  // namespace

EigenPair lanczos_smallest(const HermitianOperator& op, size_t dim, uint64_t seed, double tol,
                           const LanczosOptions& options) {
    if (dim == 0) {
        throw ValidationError("Lanczos on an empty space");
    }
    if (!(tol > 0.0)) {
        throw ValidationError("Lanczos tolerance must be positive");
    }
    const int m_max = static_cast<int>(std::min<size_t>(dim, std::max(2, options.max_basis)));
    std::vector<cplx> x = random_unit_vector(dim, seed);
    std::vector<cplx> w(dim);
    std::vector<cplx> ax(dim);
    EigenPair result;
    double best_residual = INFINITY;

    for (int restart = 0; restart <= options.max_restarts; ++restart) {
        std::vector<std::vector<cplx>> basis;
        basis.reserve(m_max);
        basis.push_back(x);
        std::vector<double> alpha, beta;
        for (int j = 0; j < m_max; ++j) {
            op(basis[j], w);
            ++result.matvecs;
            alpha.push_back(k::dot(basis[j], w).real());
            // Two passes of classical Gram-Schmidt against the whole basis.
            orthogonalize(basis, basis.size(), w);
            orthogonalize(basis, basis.size(), w);
            double b = std::sqrt(k::norm_sq(w));

            RitzPair ritz = smallest_ritz(alpha, beta, j + 1);
            double estimate = b * std::abs(ritz.vec(j));
            double scale = std::max(1.0, std::abs(ritz.value));
            bool invariant = b <= 1e-12 * scale;
            if (estimate > 0.5 * tol && !invariant && j + 1 < m_max) {
                beta.push_back(b);
                k::scale(1.0 / b, w);
                basis.push_back(w);
                continue;
            }
            x = combine(basis, ritz.vec.cast<cplx>());
            k::scale(1.0 / std::sqrt(k::norm_sq(x)), x);
            op(x, ax);
            ++result.matvecs;
            k::axpy(-ritz.value, x, ax);
            double residual = std::sqrt(k::norm_sq(ax));
            if (residual < best_residual) {
                best_residual = residual;
            }
            if (residual <= tol) {
                result.value = ritz.value;
                result.vector = std::move(x);
                result.residual = residual;
                return result;
            }
            if (invariant) {
                // Exhausted an invariant subspace without converging; perturb the restart vector.
                std::vector<cplx> kick = random_unit_vector(dim, derive_seed(seed, {static_cast<uint64_t>(restart)}));
                k::axpy(1e-3, kick, x);
                k::scale(1.0 / std::sqrt(k::norm_sq(x)), x);
            }
            break;
        }
    }
    throw NumericalError("Lanczos did not converge: best residual " + std::to_string(best_residual) +
                         " > tol " + std::to_string(tol));
}

namespace {

struct KrylovSpace {
    std::vector<std::vector<cplx>> basis;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    double beta0 = 0.0;
    double next_beta = 0.0;

    // e^{-i tau T} e_1 in the Krylov basis.
    Eigen::VectorXcd coefficients(double tau) const {
        const Eigen::Index m = eigenvalues.size();
        Eigen::VectorXcd phases(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double angle = -tau * eigenvalues(i);
            phases(i) = cplx(std::cos(angle), std::sin(angle)) * eigenvectors(0, i);
        }
        return eigenvectors.cast<cplx>() * phases;
    }

    double error(double tau) const {
        if (next_beta == 0.0) {
            return 0.0;
        }
        const Eigen::Index m = eigenvalues.size();
        cplx last(0.0);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double angle = -tau * eigenvalues(i);
            last += cplx(std::cos(angle), std::sin(angle)) * (eigenvectors(0, i) * eigenvectors(m - 1, i));
        }
        return beta0 * next_beta * std::abs(last);
    }
};

// Advances w by exp(-i tau H) for the largest tau in (0, remaining] that
// meets the error budget tol * |tau| / |total|; returns tau.
double krylov_advance(const k::PreparedObservable& h, double remaining, double total, std::vector<cplx>& w, double tol,
                      int m_cap, bool reorthogonalize) {
    const size_t dim = w.size();
    KrylovSpace ks;
    ks.beta0 = std::sqrt(k::norm_sq(w));
    ks.basis.reserve(m_cap);
    ks.basis.push_back(w);
    k::scale(1.0 / ks.beta0, ks.basis[0]);
    std::vector<double> alpha, beta;
    std::vector<cplx> r(dim);
    auto budget = [&](double tau) { return tol * std::abs(tau) / std::abs(total); };
    auto finish = [&](double tau) {
        Eigen::VectorXcd y = ks.coefficients(tau);
        w = combine(ks.basis, y);
        k::scale(ks.beta0, w);
        return tau;
    };
    for (int j = 0; j < m_cap; ++j) {
        h.apply(ks.basis[j], r);
        alpha.push_back(k::dot(ks.basis[j], r).real());
        k::axpy(-alpha.back(), ks.basis[j], r);
        if (j > 0) {
            k::axpy(-beta.back(), ks.basis[j - 1], r);
        }
        if (reorthogonalize) {
            orthogonalize(ks.basis, ks.basis.size(), r);
        }
        const double b = std::sqrt(k::norm_sq(r));
        const int m = j + 1;
        double scale = 1.0;
        for (double a : alpha) {
            scale = std::max(scale, std::abs(a));
        }
        const bool invariant = b <= 1e-13 * scale;
        const bool last = m == m_cap;
        if (invariant || last || (m >= 8 && m % 4 == 0)) {
            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
            Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1))
                                        : Eigen::VectorXd(0);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
            es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            ks.eigenvalues = es.eigenvalues();
            ks.eigenvectors = es.eigenvectors();
            ks.next_beta = invariant ? 0.0 : b;
            if (ks.error(remaining) <= budget(remaining)) {
                return finish(remaining);
            }
            if (last) {
                double lo = 0.0;
                double hi = remaining;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (ks.error(mid) <= budget(mid) ? lo : hi) = mid;
                }
                if (!(std::abs(lo) > 1e-12 * std::abs(remaining))) {
                    throw NumericalError("Krylov exponential made no progress with " + std::to_string(m_cap) +
                                         " vectors");
                }
                return finish(lo);
            }
        }
        beta.push_back(b);
        k::scale(1.0 / b, r);
        ks.basis.push_back(r);
    }
    throw NumericalError("Krylov exponential did not converge within " + std::to_string(m_cap) + " vectors");
}

}  // namespace

Statevector expm_apply(const Observable& h, double t, const Statevector& v, const ExpmOptions& options) {
    check_width(h, v);
    if (!(options.tol > 0.0) || options.max_krylov < 1 || options.krylov_dim < 0) {
        throw ValidationError("invalid Krylov exponential options");
    }
    if (t == 0.0) {
        return v;
    }
    Observable shifted = h;
    shifted.add_offset(-h.offset());
    std::vector<cplx> w(v.amplitudes().begin(), v.amplitudes().end());
    if (!shifted.terms().empty()) {
        const size_t dim = w.size();
        int m_cap = options.krylov_dim > 0 ? options.krylov_dim : kDefaultKrylovDim;
        m_cap = std::min(m_cap, options.max_krylov);
        m_cap = static_cast<int>(std::min<size_t>(static_cast<size_t>(m_cap), std::max<size_t>(2, dim)));
        m_cap = static_cast<int>(
            std::min<size_t>(static_cast<size_t>(m_cap), std::max<size_t>(8, kKrylovMemoryAmplitudes / dim)));
        const k::PreparedObservable prepared(shifted);
        double done = 0.0;
        while (std::abs(t - done) > 0.0) {
            const double step = krylov_advance(prepared, t - done, t, w, options.tol, m_cap, options.reorthogonalize);
            done = std::abs(step) >= std::abs(t - done) ? t : done + step;
        }
    }
    k::scale(std::polar(1.0, -t * h.offset()), w);
    return Statevector::normalized(std::move(w));
}

Statevector apply_single_pauli_mixer(Mixer mixer, double beta, const Statevector& v) {
    std::vector<cplx> w(v.amplitudes().begin(), v.amplitudes().end());
    k::apply_mixer(mixer, beta, w);
    return Statevector::normalized(std::move(w));
}

GroundState lanczos_ground(const Observable& h, uint64_t seed, double tol, int max_qubits) {
    if (h.n_qubits() > max_qubits) {
        throw SizeError("Lanczos ground state capped at " + std::to_string(max_qubits) + " qubits, got " +
                        std::to_string(h.n_qubits()));
    }
    const size_t dim = size_t{1} << h.n_qubits();
    const k::PreparedObservable prepared(h);
    HermitianOperator op = [&prepared](std::span<const cplx> x, std::span<cplx> y) { prepared.apply(x, y); };
    LanczosOptions options;
    // Cap Krylov memory at roughly 2^27 amplitudes.
    options.max_basis = static_cast<int>(std::clamp<size_t>((size_t{1} << 27) / dim, 20, 100));
    EigenPair pair = lanczos_smallest(op, dim, seed, tol, options);
    return {pair.value, Statevector::normalized(std::move(pair.vector)), pair.residual};
}

SampleSet sample_counts(const Statevector& v, uint64_t shots, uint64_t seed) {
    if (shots < 1) {
        throw ValidationError("shots must be >= 1");
    }
    const size_t dim = v.size();
    std::vector<double> cumulative(dim);
    double running = 0.0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < dim; ++i) {
        double p = std::norm(v[i]);
        running += p;
        cumulative[i] = running;
        if (p > 0.0) {
            last_nonzero = i;
        }
    }
    SampleSet out;
    out.n_qubits = v.n_qubits();
    out.shots = shots;
    Rng rng(seed);
    std::vector<uint64_t> hits(dim, 0);
    for (uint64_t s = 0; s < shots; ++s) {
        double u = uniform01(rng) * running;
        size_t idx = static_cast<size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        ++hits[std::min(idx, last_nonzero)];
    }
    for (size_t i = 0; i < dim; ++i) {
        if (hits[i] > 0) {
            out.counts.emplace(i, hits[i]);
        }
    }
    return out;
}

}  // namespace sqoa
