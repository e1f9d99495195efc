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

#include <cmath>

#include "sqoa/errors.hpp"
#include "sqoa/optimize.hpp"

using namespace sqoa;

namespace {

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += (x[i] - 0.1 * static_cast<double>(i)) * (x[i] - 0.1 * static_cast<double>(i));
    return s;
}

double rosenbrock(std::span<const double> x) {
    return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
}

}  // namespace

TEST(Optimize, BudgetIsEnforced) {
    BudgetedObjective f(sphere, 3);
    std::vector<double> x{1.0, 2.0};
    f(x);
    x[0] = 0.0;
    f(x);
    f(x);
    EXPECT_TRUE(f.exhausted());
    EXPECT_THROW(f(x), ValidationError);
    EXPECT_EQ(f.best().params[0], 0.0);
    EXPECT_EQ(f.trace().size(), 3u);
}

TEST(Optimize, BestIsFirstMinimum) {
    BudgetedObjective f([](std::span<const double>) { return 1.0; }, 5);
    for (double v : {1.0, 2.0, 3.0}) f(std::vector<double>{v});
    EXPECT_EQ(f.best().params[0], 1.0);
}

TEST(Optimize, LatinHypercubeStratifies) {
    Rng rng(3);
    Box box = Box::cube(3, -2.0, 2.0);
    auto pts = latin_hypercube(16, box, rng);
    ASSERT_EQ(pts.size(), 16u);
    for (size_t d = 0; d < 3; ++d) {
        std::vector<int> hits(16, 0);
        for (const auto& p : pts) {
            ASSERT_GE(p[d], -2.0);
            ASSERT_LT(p[d], 2.0);
            ++hits[static_cast<int>((p[d] + 2.0) / 0.25)];
        }
        for (int h : hits) EXPECT_EQ(h, 1);
    }
}

TEST(Optimize, BoxProjection) {
    Box box = Box::cube(2, -1.0, 1.0);
    std::vector<double> x{-3.0, 0.5};
    auto p = box.project(x);
    EXPECT_EQ(p[0], -1.0);
    EXPECT_EQ(p[1], 0.5);
}

TEST(Optimize, NelderMeadFindsQuadraticMinimum) {
    BudgetedObjective f(sphere, 2000);
    NelderMeadOptions opt;
    TracePoint best = nelder_mead(f, {1.0, 1.0, 1.0, 1.0}, opt);
    EXPECT_LT(best.objective, 1e-8);
    EXPECT_NEAR(best.params[3], 0.3, 1e-4);
    EXPECT_LE(f.evaluations(), 2000);
}

TEST(Optimize, NelderMeadRosenbrock) {
    BudgetedObjective f(rosenbrock, 3000);
    NelderMeadOptions opt;
    opt.initial_step = 0.5;
    TracePoint best = nelder_mead(f, {-1.2, 1.0}, opt);
    EXPECT_NEAR(best.params[0], 1.0, 1e-3);
    EXPECT_NEAR(best.params[1], 1.0, 2e-3);
}

TEST(Optimize, RestartsSpendTheBudget) {
    BudgetedObjective f(sphere, 400);
    NelderMeadOptions opt;
    opt.restart_until_budget = true;
    Box box = Box::cube(2, -1.0, 1.0);
    nelder_mead(f, {0.9, 0.9}, opt, &box);
    EXPECT_EQ(f.evaluations(), 400);
    for (const TracePoint& t : f.trace()) {
        for (double v : t.params) {
            EXPECT_GE(v, -1.0);
            EXPECT_LE(v, 1.0);
        }
    }
}

TEST(Optimize, CountsInvocations) {
    const uint64_t before = nelder_mead_invocations();
    BudgetedObjective f(sphere, 10);
    nelder_mead(f, {0.0}, {});
    EXPECT_EQ(nelder_mead_invocations(), before + 1);
}

TEST(Optimize, Deterministic) {
    auto run = [] {
        BudgetedObjective f(rosenbrock, 150);
        nelder_mead(f, {-1.0, 2.0}, {});
        return f.trace();
    };
    auto a = run(), b = run();
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].params, b[i].params);
        EXPECT_EQ(a[i].objective, b[i].objective);
    }
}
