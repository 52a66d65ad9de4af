// Copyright 2026 The cmip Authors
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

#include "cmip/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "cmip/errors.hpp"
#include "cmip/rng.hpp"
#include "gtest/gtest.h"

namespace cmip {
namespace {

constexpr double kPi = std::numbers::pi;

/// Expects `s` to equal cos(a/2)|H> + sign sin(a/2)|V> up to a global phase.
void expect_pair_state(const StateVector& s, double angle, double sign, double tol = 1e-9) {
    ASSERT_EQ(s.dimension(), 2u);
    const complex phase = std::abs(s[0]) > 1e-6 ? s[0] / std::abs(s[0]) : s[1] / std::abs(s[1]) * sign;
    EXPECT_NEAR(std::abs(s[0] - phase * std::cos(angle / 2)), 0.0, tol);
    EXPECT_NEAR(std::abs(s[1] - phase * sign * std::sin(angle / 2)), 0.0, tol);
}

}  // namespace

TEST(SolveGamma1, Examples) {
    EXPECT_EQ(solve_gamma1(kPi / 2, kPi / 2), 0.0);
    EXPECT_NEAR(solve_gamma1(kPi / 4, kPi / 2), 0.571858870, 1e-9);
    EXPECT_NEAR(solve_gamma1(0.5351, kPi), kPi / 4, 1e-15);
    EXPECT_NEAR(solve_gamma1(0.0, 1.0), kPi / 4, 1e-15);
}

TEST(SolveGamma1, Errors) {
    EXPECT_THROW(solve_gamma1(1.0, 0.5), WrongBranchError);
    EXPECT_THROW(solve_gamma1(-0.1, 0.5), InvalidArgument);
    EXPECT_THROW(solve_gamma1(0.1, 3.2), InvalidArgument);
    EXPECT_THROW(solve_gamma1(std::nan(""), 1.0), InvalidArgument);
}

TEST(SolveGamma2, Examples) {
    EXPECT_EQ(solve_gamma2(kPi / 4, kPi / 4).c2, 1.0);
    EXPECT_EQ(solve_gamma2(kPi / 4, kPi / 4).gamma2(), 0.0);
    const auto s = solve_gamma2(kPi / 2, kPi / 4);
    EXPECT_NEAR(s.c2, 0.414213562, 1e-9);
    EXPECT_NEAR(std::cos(2 * s.gamma2()), s.c2, 1e-15);
    // Signed hardware angle of the fast-axis-horizontal plate.
    EXPECT_LT(s.hardware_angle(), 0.0);
    EXPECT_NEAR(std::cos(-2 * s.hardware_angle()), -s.c2, 1e-15);
    EXPECT_EQ(solve_gamma2(kPi / 2, 0.0).c2, 0.0);
    EXPECT_EQ(solve_gamma2(kPi, 1.0).c2, 0.0);
    EXPECT_THROW(solve_gamma2(0.5, 1.0), WrongBranchError);
}

TEST(CmipPlan, BranchSelectionAndValidation) {
    auto e = CmipPlan::solve(0.5, 1.0);
    EXPECT_EQ(e.branch, Branch::Expand);
    EXPECT_EQ(e.gamma2, 0.0);
    auto c = CmipPlan::solve(1.0, 0.5);
    EXPECT_EQ(c.branch, Branch::Contract);
    EXPECT_EQ(c.gamma1, 0.0);
    EXPECT_GE(c.gamma2, 0.0);
    EXPECT_LE(c.gamma2, kPi / 4);
    e.gamma2 = 0.1;
    EXPECT_THROW(e.validate(), InvalidArgument);
    c.gamma2 = 1.0;
    EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(BuildUnitary, Examples) {
    const auto id = build_unitary(CmipPlan::solve(1.0, 1.0));
    EXPECT_LT((id.matrix() - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);

    const std::vector<std::string> h1{"H", "1"};
    const std::vector<std::string> v2{"V", "2"};
    const auto b = signal_basis();
    const auto u = device_unitary(kPi / 4, 0.0);
    EXPECT_NEAR(std::abs(u.matrix()(static_cast<Eigen::Index>(b.index_of_symbols(v2)),
                                    static_cast<Eigen::Index>(b.index_of_symbols(h1)))),
                1.0, 1e-15);

    CounterRng rng(100);
    for (int i = 0; i < 100; ++i) {
        auto plan = CmipPlan::solve(rng.uniform() * kPi, rng.uniform() * kPi);
        plan.phi = rng.uniform() * 6.0;
        plan.phi_prime = rng.uniform() * 6.0;
        const Operator op = build_unitary(plan);
        ASSERT_LT((op.matrix().adjoint() * op.matrix() - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(),
                  1e-12);
    }
}

TEST(RunCmip, EqualAnglesPassThrough) {
    for (double a : {0.3, 1.0, 2.0}) {
        const auto o = run_cmip(Sign::Minus, CmipPlan::solve(a, a));
        EXPECT_NEAR(o.p_success, 1.0, 1e-15);
        expect_pair_state(*o.success_state, a, -1.0);
        EXPECT_FALSE(o.failure_state.has_value());
    }
}

TEST(RunCmip, ExpandToOrthogonal) {
    const auto o = run_cmip(Sign::Plus, CmipPlan::solve(kPi / 4, kPi / 2));
    EXPECT_NEAR(o.p_success, 0.292893219, 1e-9);
    expect_pair_state(*o.success_state, kPi / 2, 1.0);
    EXPECT_NEAR(std::abs((*o.failure_state)[1]), 1.0, 1e-12);  // V on path 2
    EXPECT_NEAR(o.p_success + o.p_failure, 1.0, 1e-12);
}

TEST(RunCmip, Contract) {
    const auto o = run_cmip(Sign::Minus, CmipPlan::solve(kPi / 2, kPi / 4));
    EXPECT_NEAR(o.p_success, 0.585786438, 1e-9);
    expect_pair_state(*o.success_state, kPi / 4, -1.0);
    EXPECT_NEAR(std::abs((*o.failure_state)[0]), 1.0, 1e-12);  // H on path 2
}

TEST(RunCmip, RejectsInconsistentPlan) {
    auto plan = CmipPlan::solve(kPi / 4, kPi / 2);
    plan.gamma1 += 1e-6;
    EXPECT_THROW(run_cmip(Sign::Plus, plan), InvalidArgument);
}

TEST(RunCmip, InnerProductContract) {
    for (int i = 1; i <= 30; ++i) {
        for (int k = 1; k <= 30; ++k) {
            const double a = 0.1 * i;
            const double b = 0.1 * k;
            const auto plan = CmipPlan::solve(a, b);
            const auto p = run_cmip(Sign::Plus, plan);
            const auto m = run_cmip(Sign::Minus, plan);
            const complex ip = p.success_state->inner(*m.success_state);
            ASSERT_NEAR(ip.real(), std::cos(b), 1e-9) << a << ' ' << b;
            ASSERT_NEAR(ip.imag(), 0.0, 1e-9);
            ASSERT_NEAR(p.p_success, closed_form_probability(a, b), 1e-12);
        }
    }
}

TEST(ClosedForm, Examples) {
    EXPECT_EQ(closed_form_probability(kPi / 2, kPi / 2), 1.0);
    EXPECT_NEAR(closed_form_probability(kPi / 4, kPi / 2), 0.292893219, 1e-9);
    EXPECT_NEAR(closed_form_probability(kPi / 2, kPi / 4), 0.585786438, 1e-9);
    EXPECT_EQ(closed_form_probability(kPi, 1.0), 0.0);
    EXPECT_EQ(closed_form_probability(0.0, 1.0), 0.0);
    // Continuity at alpha = beta from both sides.
    EXPECT_NEAR(closed_form_probability(1.0, 1.0 + 1e-9), 1.0, 1e-8);
    EXPECT_NEAR(closed_form_probability(1.0, 1.0 - 1e-9), 1.0, 1e-8);
}

TEST(ClosedForm, IdpPoint) {
    for (int i = 1; i <= 15; ++i) {
        const double a = 0.1 * i;
        EXPECT_NEAR(closed_form_probability(a, kPi / 2), 1.0 - std::cos(a), 1e-12);
    }
}

TEST(SampleRuns, CertainSuccess) {
    const auto c = sample_runs(Sign::Plus, CmipPlan::solve(1.0, 1.0), 1000, 12345);
    EXPECT_EQ(c.success, 1000u);
    EXPECT_EQ(c.failure, 0u);
    EXPECT_EQ(c.seed, 12345u);
}

TEST(SampleRuns, BinomialConcentration) {
    const std::uint64_t n = 100000;
    const auto c = sample_runs(Sign::Plus, CmipPlan::solve(kPi / 4, kPi / 2), n, 42);
    const double p = 0.292893219;
    EXPECT_EQ(c.success + c.failure, n);
    EXPECT_NEAR(static_cast<double>(c.success) / n, p, 4 * std::sqrt(p * (1 - p) / n));
}

TEST(SampleRuns, DeterministicAcrossWorkers) {
    const auto plan = CmipPlan::solve(0.7, 2.0);
    const auto a = sample_runs(Sign::Minus, plan, 300000, 42);
    const auto b = sample_runs(Sign::Minus, plan, 300000, 42);
    const auto c = sample_runs(Sign::Minus, plan, 300000, 42, 3);
    EXPECT_EQ(a.success, b.success);
    EXPECT_EQ(a.success, c.success);
    EXPECT_NE(a.success, sample_runs(Sign::Minus, plan, 300000, 43).success);
    EXPECT_THROW(sample_runs(Sign::Plus, plan, 0, 1), InvalidArgument);
}

}  // namespace cmip
