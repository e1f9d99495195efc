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
#include <functional>
#include <span>
#include <vector>

namespace sqoa {

using cplx = std::complex<double>;

/// y = A x for a Hermitian A.
using HermitianOperator = std::function<void(std::span<const cplx> x, std::span<cplx> y)>;

struct LanczosOptions {
    int max_basis = 100;    // Krylov vectors kept before an explicit restart
    int max_restarts = 200;
};

struct EigenPair {
    double value = 0.0;
    std::vector<cplx> vector;  // unit norm
    double residual = 0.0;     // ||A v - value v||
    int matvecs = 0;
};

/// Smallest eigenpair of a Hermitian operator by explicitly restarted Lanczos
/// with full reorthogonalization. The start vector is drawn from `seed`.
/// Throws NumericalError if the residual does not reach `tol`.
EigenPair lanczos_smallest(const HermitianOperator& op, size_t dim, uint64_t seed, double tol,
                           const LanczosOptions& options = {});

}  // namespace sqoa
