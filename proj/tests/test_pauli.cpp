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
#include "sqoa/errors.hpp"
#include "sqoa/pauli.hpp"
#include "sqoa/random.hpp"

using namespace sqoa;

TEST(Pauli, LabelRoundTrip) {
    PauliString p = PauliString::from_label("XIZY");
    EXPECT_EQ(p.width, 4);
    EXPECT_EQ(p.label(), "XIZY");
    EXPECT_EQ(oracle::letter(p, 3), 'X');
    EXPECT_EQ(oracle::letter(p, 0), 'Y');
    EXPECT_EQ(p.y_count(), 1);
    EXPECT_THROW(PauliString::from_label("XQ"), ValidationError);
}

TEST(Pauli, SingleAndIdentity) {
    EXPECT_TRUE(PauliString::identity(3).is_identity());
    EXPECT_EQ(PauliString::single(3, 2, PauliAxis::Y).label(), "YII");
    EXPECT_THROW(PauliString::single(3, 3, PauliAxis::X), ValidationError);
}

TEST(Pauli, AxisParsing) {
    EXPECT_EQ(parse_axis("y"), PauliAxis::Y);
    EXPECT_EQ(axis_char(PauliAxis::Z), 'Z');
    EXPECT_THROW(parse_axis("W"), ValidationError);
}

TEST(Pauli, TensorOfDisjointSupports) {
    PauliString a = PauliString::single(3, 0, PauliAxis::X);
    PauliString b = PauliString::single(3, 2, PauliAxis::Z);
    EXPECT_EQ(a.tensor(b).label(), "ZIX");
    EXPECT_THROW(a.tensor(a), ValidationError);
}

TEST(Pauli, SymplecticActionMatchesKronecker) {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        PauliString p = PauliString::identity(3);
        for (int q = 0; q < 3; ++q) {
            uint64_t l = uniform_index(rng, 4);
            p.x_mask |= (l & 1) << q;
            p.z_mask |= (l >> 1) << q;
        }
        oracle::Mat m = oracle::dense_pauli(p);
        for (uint64_t b = 0; b < 8; ++b) {
            const double sign = (std::popcount(b & p.z_mask) & 1) ? -1.0 : 1.0;
            for (uint64_t r = 0; r < 8; ++r) {
                const oracle::cplx want = r == (b ^ p.x_mask) ? p.y_phase() * sign : 0.0;
                EXPECT_NEAR(std::abs(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b)) - want), 0.0,
                            1e-14);
            }
        }
    }
}

TEST(Pauli, CommutationExamples) {
    EXPECT_TRUE(strings_commute(PauliString::from_label("XX"), PauliString::from_label("YZ")));
    EXPECT_FALSE(strings_commute(PauliString::from_label("XXI"), PauliString::from_label("YIZ")));
    EXPECT_TRUE(strings_commute(PauliString::from_label("XYZ"), PauliString::identity(3)));
    EXPECT_THROW(strings_commute(PauliString::from_label("X"), PauliString::from_label("XX")), ValidationError);
}

TEST(Pauli, CommutationMatchesMatrices) {
    const char* labels[] = {"XX", "YZ", "ZI", "IY", "XY", "ZZ", "II", "YX"};
    for (const char* a : labels) {
        for (const char* b : labels) {
            PauliString pa = PauliString::from_label(a), pb = PauliString::from_label(b);
            oracle::Mat ma = oracle::dense_pauli(pa), mb = oracle::dense_pauli(pb);
            const bool commute = (ma * mb - mb * ma).norm() < 1e-12;
            const bool anti = (ma * mb + mb * ma).norm() < 1e-12;
            EXPECT_NE(commute, anti);
            EXPECT_EQ(strings_commute(pa, pb), commute) << a << " " << b;
        }
    }
}

TEST(Observable, MergesEqualStrings) {
    Observable h(2, 0.5);
    h.add_term(1.0, PauliString::from_label("XZ"));
    h.add_term(0.25, PauliString::from_label("XZ"));
    h.add_term(2.0, PauliString::identity(2));
    ASSERT_EQ(h.terms().size(), 1u);
    EXPECT_DOUBLE_EQ(h.terms()[0].coeff, 1.25);
    EXPECT_DOUBLE_EQ(h.offset(), 2.5);
    EXPECT_DOUBLE_EQ(h.coefficient_norm(), 1.25);
    EXPECT_THROW(h.add_term(1.0, PauliString::from_label("X")), ValidationError);
    EXPECT_THROW(h.add_term(std::nan(""), PauliString::from_label("XX")), ValidationError);
}

TEST(Observable, DenseIsHermitianAndKroneckerBuilt) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int nq = 1 + static_cast<int>(uniform_index(rng, 5));
        Observable h = oracle::random_observable(nq, 6, rng);
        oracle::Mat m = oracle::dense(h);
        EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
        oracle::Mat by_term = h.offset() * oracle::Mat::Identity(m.rows(), m.cols());
        for (const PauliTerm& t : h.terms()) {
            oracle::Mat f = oracle::Mat::Identity(1, 1);
            for (char c : t.pauli.label()) f = oracle::kron(f, oracle::sigma(c));
            by_term += t.coeff * f;
        }
        EXPECT_LT((m - by_term).norm(), 1e-12);
    }
}

TEST(Observable, UniformSum) {
    Observable h = uniform_pauli_sum(3, PauliAxis::Y);
    ASSERT_EQ(h.terms().size(), 3u);
    for (const PauliTerm& t : h.terms()) {
        EXPECT_DOUBLE_EQ(t.coeff, 1.0);
        EXPECT_EQ(t.pauli.y_count(), 1);
    }
}

TEST(Random, DerivedSeedsAreStableAndDistinct) {
    EXPECT_EQ(derive_seed(5, {1, 2}), derive_seed(5, {1, 2}));
    EXPECT_NE(derive_seed(5, {1, 2}), derive_seed(5, {2, 1}));
    EXPECT_NE(derive_seed(5, {1}), derive_seed(6, {1}));
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform_real(rng, -2.0, 3.0);
        EXPECT_GE(u, -2.0);
        EXPECT_LT(u, 3.0);
        EXPECT_LT(uniform_index(rng, 7), 7u);
    }
}
