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

// Serial reference kernels against their OpenMP counterparts, plus the
// Krylov exponential on a relaxed MaxCut Hamiltonian.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "sqoa/encoding.hpp"
#include "sqoa/engine.hpp"
#include "sqoa/kernels.hpp"
#include "sqoa/random.hpp"

namespace {

using namespace sqoa;
namespace ks = sqoa::kernels::serial;
namespace ko = sqoa::kernels::omp;

Observable relaxed(int n) {
    Graph g = generate_regular_graph(n, 3, 7);
    return build_relaxed_hamiltonian(g, build_encoding(g, greedy_coloring(g), 3));
}

std::vector<cplx> random_vector(size_t dim) {
    Rng rng(1);
    std::vector<cplx> v(dim);
    for (cplx& z : v) z = cplx(uniform_real(rng, -1.0, 1.0), uniform_real(rng, -1.0, 1.0));
    return v;
}

void BM_ApplySerial(benchmark::State& state) {
    Observable h = relaxed(static_cast<int>(state.range(0)));
    std::vector<cplx> in = random_vector(size_t{1} << h.n_qubits()), out(in.size());
    for (auto _ : state) {
        ks::apply_observable(h, in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["qubits"] = h.n_qubits();
}

void BM_ApplyOmp(benchmark::State& state) {
    Observable h = relaxed(static_cast<int>(state.range(0)));
    std::vector<cplx> in = random_vector(size_t{1} << h.n_qubits()), out(in.size());
    for (auto _ : state) {
        ko::apply_observable(h, in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["qubits"] = h.n_qubits();
}

void BM_ApplyPrepared(benchmark::State& state) {
    Observable h = relaxed(static_cast<int>(state.range(0)));
    ko::PreparedObservable prepared(h);
    std::vector<cplx> in = random_vector(size_t{1} << h.n_qubits()), out(in.size());
    for (auto _ : state) {
        prepared.apply(in, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["qubits"] = h.n_qubits();
}

void BM_ExpectationSerial(benchmark::State& state) {
    Observable h = relaxed(static_cast<int>(state.range(0)));
    std::vector<cplx> v = random_vector(size_t{1} << h.n_qubits());
    for (auto _ : state) benchmark::DoNotOptimize(ks::expectation(h, v));
}

void BM_ExpectationOmp(benchmark::State& state) {
    Observable h = relaxed(static_cast<int>(state.range(0)));
    std::vector<cplx> v = random_vector(size_t{1} << h.n_qubits());
    for (auto _ : state) benchmark::DoNotOptimize(ko::expectation(h, v));
}

void BM_MixerSerial(benchmark::State& state) {
    std::vector<cplx> v = random_vector(size_t{1} << state.range(0));
    for (auto _ : state) {
        ks::apply_mixer(PauliAxis::X, 0.3, v);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_MixerOmp(benchmark::State& state) {
    std::vector<cplx> v = random_vector(size_t{1} << state.range(0));
    for (auto _ : state) {
        ko::apply_mixer(PauliAxis::X, 0.3, v);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_ExpmApply(benchmark::State& state) {
    Observable h = relaxed(static_cast<int>(state.range(0)));
    Statevector v = prepare_initial_state(h.n_qubits(), Mixer::X);
    for (auto _ : state) benchmark::DoNotOptimize(expm_apply(h, 0.1, v));
    state.counters["qubits"] = h.n_qubits();
}

}  // namespace

BENCHMARK(BM_ApplySerial)->Arg(20)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyOmp)->Arg(20)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyPrepared)->Arg(20)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpectationSerial)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpectationOmp)->Arg(32)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixerSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MixerOmp)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpmApply)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
