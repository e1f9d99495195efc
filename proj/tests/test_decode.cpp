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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqoa/ansatz.hpp"
#include "sqoa/decode.hpp"
#include "sqoa/errors.hpp"

using namespace sqoa;
using oracle::cplx;

namespace {

Graph single_edge() { return Graph(2, {{0, 1}}); }

EncodingMap encode(const Graph& g, int k) { return build_encoding(g, greedy_coloring(g), k); }

// |+-> with qubit 0 in |+> and qubit 1 in |->.
Statevector plus_minus() { return Statevector::normalized({1.0, 1.0, -1.0, -1.0}); }

}  // namespace

TEST(Round, ZBasisVariable) {
    Graph g(1, {});
    EncodingMap m = encode(g, 1);
    SpinSolution s = pauli_round(Statevector(1), m, g);
    EXPECT_EQ(s.spins, (std::vector<int>{1}));
    EXPECT_NEAR(s.expectations[0], 1.0, 1e-15);
    EXPECT_EQ(s.ties, 0);
}

TEST(Round, PlusMinusCutsTheEdge) {
    Graph g = single_edge();
    EncodingMap m = encode(g, 3);
    ASSERT_EQ(m.slot_of[0].qubit, 0);
    SpinSolution s = pauli_round(plus_minus(), m, g);
    EXPECT_EQ(s.spins, (std::vector<int>{1, -1}));
    EXPECT_EQ(s.cut_value, 1);
    EXPECT_EQ(s.ties, 0);
    EXPECT_EQ(spins_to_bits(s.spins), "01");
}

TEST(Round, DegenerateSuperpositionTies) {
    Graph g = single_edge();
    // (|+-> + |-+>)/sqrt2 = (|00> - |11>)/sqrt2.
    Statevector v = Statevector::normalized({1.0, 0.0, 0.0, -1.0});
    SpinSolution s = pauli_round(v, encode(g, 3), g);
    EXPECT_NEAR(s.expectations[0], 0.0, 1e-15);
    EXPECT_NEAR(s.expectations[1], 0.0, 1e-15);
    EXPECT_EQ(s.ties, 2);
    EXPECT_EQ(s.spins, (std::vector<int>{1, 1}));
    EXPECT_EQ(s.cut_value, 0);
}

TEST(Round, GlobalPhaseInvariant) {
    Graph g = generate_regular_graph(12, 3, 1);
    EncodingMap m = encode(g, 3);
    Observable h = build_relaxed_hamiltonian(g, m);
    Statevector v = prepare_state(h, Mixer::X, expand_schedule({0.2, 0.0, 0.8, -0.8}, 2));
    std::vector<cplx> rotated(v.amplitudes().begin(), v.amplitudes().end());
    for (cplx& z : rotated) z *= std::polar(1.0, 1.1);
    SpinSolution a = pauli_round(v, m, g);
    SpinSolution b = pauli_round(Statevector::from_unit(rotated), m, g);
    EXPECT_EQ(a.spins, b.spins);
    for (size_t i = 0; i < a.expectations.size(); ++i) EXPECT_NEAR(a.expectations[i], b.expectations[i], 1e-12);
}

TEST(Round, ExpectationsMatchDensePauli) {
    Graph g = generate_regular_graph(10, 3, 2);
    EncodingMap m = encode(g, 3);
    Rng rng(3);
    std::vector<cplx> amps = oracle::random_state(m.n_qubits, rng);
    SpinSolution s = pauli_round(Statevector::from_unit(amps), m, g);
    oracle::Vec x = oracle::to_vec(amps);
    for (int i = 0; i < g.num_vertices(); ++i) {
        const double want = x.dot(oracle::dense_pauli(m.pauli_of(i)) * x).real();
        EXPECT_NEAR(s.expectations[i], want, 1e-12);
        EXPECT_EQ(s.spins[i], want > 0 ? 1 : -1);
    }
    EXPECT_EQ(s.cut_value, cut_value(g, s.spins));
}

TEST(Round, MismatchedInputs) {
    Graph g = single_edge();
    EXPECT_THROW(pauli_round(Statevector(3), encode(g, 3), g), ValidationError);
    EXPECT_THROW(pauli_round(Statevector(2), encode(g, 3), Graph(3, {{0, 1}})), ValidationError);
}

TEST(Metrics, SingleEdgeGroundState) {
    Graph g = single_edge();
    EncodingMap m = encode(g, 3);
    Observable h = build_relaxed_hamiltonian(g, m);
    Oracles o{lanczos_ground(h, 1).energy, best_cut(g, CutMode::certified, 1).value, true};
    EXPECT_NEAR(o.e_min, -2.0, 1e-9);
    Metrics r = compute_metrics(g, h, plus_minus(), m, o);
    EXPECT_NEAR(r.alpha_r, 1.0, 1e-9);
    EXPECT_EQ(r.alpha_c, 1.0);
    EXPECT_TRUE(r.certified_c_opt);
}

TEST(Metrics, RatiosAreExactQuotients) {
    Oracles o{-7.5, 9, false};
    Metrics r = make_metrics(-7.5, 6, 2, o);
    EXPECT_EQ(r.alpha_r, 1.0);
    EXPECT_EQ(r.alpha_c, 6.0 / 9.0);
    EXPECT_EQ(r.ties, 2);
    EXPECT_FALSE(r.certified_c_opt);
    EXPECT_THROW(make_metrics(1.0, 1, 0, Oracles{0.0, 1, true}), DomainError);
    EXPECT_THROW(make_metrics(1.0, 1, 0, Oracles{-1.0, 0, true}), DomainError);
}

TEST(Metrics, IsingOptimalBasisState) {
    Graph g = generate_regular_graph(10, 3, 4);
    EncodingMap m = encode(g, 1);
    Observable h = build_relaxed_hamiltonian(g, m);
    CutResult best = best_cut(g, CutMode::certified, 1);
    uint64_t index = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (best.spins[v] < 0) index |= uint64_t{1} << m.slot_of[v].qubit;
    }
    Oracles o{lanczos_ground(h, 1).energy, best.value, true};
    EXPECT_NEAR(o.e_min, -best.value, 1e-9);
    Metrics r = compute_metrics(g, h, Statevector::basis(m.n_qubits, index), m, o);
    EXPECT_EQ(r.alpha_c, 1.0);
    EXPECT_NEAR(r.alpha_r, 1.0, 1e-9);
}

TEST(Metrics, QsciResultPath) {
    Graph g = generate_regular_graph(10, 3, 6);
    EncodingMap m = encode(g, 3);
    Observable h = build_relaxed_hamiltonian(g, m);
    Subspace s;
    s.n_qubits = m.n_qubits;
    s.requested = 1 << m.n_qubits;
    for (uint64_t i = 0; i < (uint64_t{1} << m.n_qubits); ++i) s.basis.push_back(i);
    QsciResult res = qsci_ground(build_effective_hamiltonian(h, s), 1);
    Oracles o{lanczos_ground(h, 1).energy, best_cut(g, CutMode::certified, 1).value, true};
    Metrics r = compute_metrics(g, h, res, m, o);
    EXPECT_NEAR(r.alpha_r, 1.0, 1e-8);
    EXPECT_GE(r.alpha_c, 0.0);
    EXPECT_LE(r.alpha_c, 1.0);
}

TEST(Metrics, RelaxationBoundOnSmallInstances) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_regular_graph(6 + 2 * static_cast<int>(seed % 6), 3, seed);
        Observable h = build_relaxed_hamiltonian(g, encode(g, 3));
        EXPECT_LE(lanczos_ground(h, seed).energy, -oracle::naive_max_cut(g) + 1e-9);
    }
}
