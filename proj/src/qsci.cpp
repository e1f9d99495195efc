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

#include "sqoa/qsci.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "kernel_terms.hpp"
#include "sqoa/errors.hpp"
#include "sqoa/kernels.hpp"

namespace sqoa {

namespace {

Subspace top_ranked(std::vector<std::pair<uint64_t, double>> weighted, int r, int n_qubits) {
    if (r < 1) {
        throw ValidationError("subspace size r must be >= 1");
    }
    std::stable_sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Subspace s;
    s.n_qubits = n_qubits;
    s.requested = r;
    const size_t keep = std::min<size_t>(weighted.size(), static_cast<size_t>(r));
    s.basis.reserve(keep);
    for (size_t i = 0; i < keep; ++i) {
        s.basis.push_back(weighted[i].first);
    }
    return s;
}

}  // namespace

Subspace select_subspace(const SampleSet& samples, int r) {
    std::vector<std::pair<uint64_t, double>> weighted;
    weighted.reserve(samples.counts.size());
    for (const auto& [index, count] : samples.counts) {
        weighted.emplace_back(index, static_cast<double>(count));
    }
    return top_ranked(std::move(weighted), r, samples.n_qubits);
}

Subspace select_subspace_exact(const Statevector& v, int r) {
    std::vector<std::pair<uint64_t, double>> weighted;
    for (uint64_t i = 0; i < v.size(); ++i) {
        double p = std::norm(v[i]);
        if (p > 0.0) {
            weighted.emplace_back(i, p);
        }
    }
    return top_ranked(std::move(weighted), r, v.n_qubits());
}

EffectiveHamiltonian::EffectiveHamiltonian(Subspace subspace, std::vector<std::vector<Entry>> rows)
    : subspace_(std::move(subspace)) {
    if (static_cast<int>(rows.size()) != subspace_.size()) {
        throw ValidationError("row count does not match subspace size");
    }
    row_start_.reserve(rows.size() + 1);
    row_start_.push_back(0);
    for (auto& r : rows) {
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        values_.insert(values_.end(), r.begin(), r.end());
        row_start_.push_back(values_.size());
    }
}

std::span<const EffectiveHamiltonian::Entry> EffectiveHamiltonian::row(int i) const {
    return std::span<const Entry>(values_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]);
}

void EffectiveHamiltonian::apply(std::span<const cplx> x, std::span<cplx> y) const {
    const int64_t n = dim();
#pragma omp parallel for schedule(static) if (n >= 4096)
    for (int64_t i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (const Entry& e : row(static_cast<int>(i))) {
            s += e.value * x[e.col];
        }
        y[i] = s;
    }
}

Eigen::MatrixXcd EffectiveHamiltonian::dense() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        for (const Entry& e : row(i)) {
            m(i, e.col) = e.value;
        }
    }
    return m;
}

EffectiveHamiltonian build_effective_hamiltonian(const Observable& h, const Subspace& s) {
    if (h.n_qubits() != s.n_qubits) {
        throw ValidationError("observable width " + std::to_string(h.n_qubits()) + " does not match subspace width " +
                              std::to_string(s.n_qubits));
    }
    const int dim = s.size();
    std::unordered_map<uint64_t, int> position;
    position.reserve(static_cast<size_t>(dim) * 2);
    for (int i = 0; i < dim; ++i) {
        if (!position.emplace(s.basis[i], i).second) {
            throw ValidationError("subspace basis contains a duplicate state");
        }
    }
    const auto terms = kernels::internal::flatten(h);

    // <x_i|P|x_j> = phase(x_j) when x_i = x_j ^ x_mask.
    std::vector<std::vector<EffectiveHamiltonian::Entry>> rows(dim);
    for (int j = 0; j < dim; ++j) {
        const uint64_t xj = s.basis[j];
        double diagonal = h.offset();
        std::vector<std::pair<int, cplx>> upper;
        for (const auto& t : terms) {
            const uint64_t xi = xj ^ t.x_mask;
            const double sign = kernels::internal::parity_sign(xj & t.z_mask);
            if (t.x_mask == 0) {
                diagonal += sign * t.re;
                continue;
            }
            auto it = position.find(xi);
            if (it == position.end() || it->second > j) {
                continue;
            }
            upper.emplace_back(it->second, cplx(sign * t.re, sign * t.im));
        }
        rows[j].push_back({j, cplx(diagonal, 0.0)});
        for (const auto& [i, v] : upper) {
            rows[i].push_back({j, v});
            rows[j].push_back({i, std::conj(v)});
        }
    }
    // Several terms can share an x_mask and hence a partner; merge them.
    for (auto& r : rows) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        std::vector<EffectiveHamiltonian::Entry> merged;
        for (const auto& e : r) {
            if (!merged.empty() && merged.back().col == e.col) {
                merged.back().value += e.value;
            } else {
                merged.push_back(e);
            }
        }
        r = std::move(merged);
    }
    return EffectiveHamiltonian(s, std::move(rows));
}

QsciResult qsci_ground(const EffectiveHamiltonian& h_eff, uint64_t seed, double tol) {
    const int dim = h_eff.dim();
    if (dim < 1) {
        throw ValidationError("QSCI needs a non-empty subspace");
    }
    QsciResult out;
    out.subspace = h_eff.subspace();
    if (dim <= kDenseQsciLimit) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_eff.dense());
        if (es.info() != Eigen::Success) {
            throw NumericalError("dense eigensolver failed on the effective Hamiltonian");
        }
        out.energy = es.eigenvalues()(0);
        Eigen::VectorXcd vec = es.eigenvectors().col(0);
        out.coefficients.assign(vec.data(), vec.data() + dim);
    } else {
        HermitianOperator op = [&h_eff](std::span<const cplx> x, std::span<cplx> y) { h_eff.apply(x, y); };
        EigenPair pair = lanczos_smallest(op, static_cast<size_t>(dim), seed, tol);
        out.energy = pair.value;
        out.coefficients = std::move(pair.vector);
    }
    std::vector<cplx> hv(dim);
    h_eff.apply(out.coefficients, hv);
    kernels::omp::axpy(-out.energy, out.coefficients, hv);
    out.residual = std::sqrt(kernels::omp::norm_sq(hv));
    if (out.residual > tol) {
        throw NumericalError("QSCI eigenpair residual " + std::to_string(out.residual) + " exceeds tol");
    }
    return out;
}

Statevector lift_to_statevector(const QsciResult& result, int n_qubits) {
    if (result.subspace.size() != static_cast<int>(result.coefficients.size())) {
        throw ValidationError("coefficient count does not match subspace size");
    }
    const size_t dim = size_t{1} << n_qubits;
    std::vector<cplx> amps(dim, cplx(0.0));
    for (int i = 0; i < result.subspace.size(); ++i) {
        uint64_t x = result.subspace.basis[i];
        if (x >= dim) {
            throw ValidationError("basis state " + std::to_string(x) + " does not fit " + std::to_string(n_qubits) +
                                  " qubits");
        }
        amps[x] = result.coefficients[i];
    }
    return Statevector::normalized(std::move(amps));
}

}  // namespace sqoa
