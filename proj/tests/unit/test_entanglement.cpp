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

#include "cmip/entanglement.hpp"

#include <cmath>
#include <numbers>

#include "cmip/errors.hpp"
#include "gtest/gtest.h"

namespace cmip {
namespace {

constexpr double kPi = std::numbers::pi;
const double kAlpha = std::asin(0.51);  // E = 0.51 input of the concentration run
constexpr double kGamma2 = kPi / 9;

/// Builds the filtered path-1 pair state by hand from the plate action
/// H1 -> cos 2g1 H1, V1 -> cos 2g2 V1, independent of the library's evolution.
StateVector hand_branch1(double alpha, double delta, double g1, double g2) {
    CVector v = CVector::Zero(4);
    v[0] = std::cos(alpha / 2) * std::cos(2 * g1);
    v[3] = std::polar(1.0, delta) * std::sin(alpha / 2) * std::cos(2 * g2);
    v.normalize();
    return StateVector(polarization_pair_basis(), v);
}

}  // namespace

TEST(TwoPhoton, Preparation) {
    const auto s0 = prepare_two_photon({0.0, 0.0});
    EXPECT_NEAR(std::abs(s0[0]), 1.0, 1e-15);
    EXPECT_NEAR(concurrence(*postselect(s0, labels::kSignalPath, "1").state), 0.0, 1e-12);
    const auto bell = prepare_two_photon({kPi / 2, 0.0});
    EXPECT_NEAR(concurrence(*postselect(bell, labels::kSignalPath, "1").state), 1.0, 1e-12);
    EXPECT_NEAR(TwoPhotonConfig::from_entanglement(0.51).alpha, kAlpha, 1e-15);
    EXPECT_NEAR((TwoPhotonConfig{kAlpha, 0.0}.entanglement()), 0.51, 1e-15);
    EXPECT_THROW(TwoPhotonConfig::from_entanglement(1.2), InvalidArgument);
    EXPECT_THROW(prepare_two_photon({-0.1, 0.0}), InvalidArgument);
}

TEST(TwoPhoton, DiagonalBasisReexpression) {
    // (|psi+>|+> + |psi->|->)/sqrt2 with psi+- = cos(a/2)H +- e^{i delta} sin(a/2)V.
    const double a = 1.1;
    const double d = 0.4;
    const auto s = prepare_two_photon({a, d});
    const double r = 1 / std::sqrt(2.0);
    const complex e = std::polar(1.0, d);
    CVector expect = CVector::Zero(8);
    for (int sign : {1, -1}) {
        const complex sh = r * std::cos(a / 2);
        const complex sv = r * double(sign) * e * std::sin(a / 2);
        const complex ih = r;
        const complex iv = r * double(sign);
        expect[0] += sh * ih;  // H 1 H
        expect[1] += sh * iv;  // H 1 V
        expect[4] += sv * ih;  // V 1 H
        expect[5] += sv * iv;  // V 1 V
    }
    EXPECT_LT((s.amplitudes() - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BranchProbabilities, Examples) {
    const auto [n1, n2] = branch_probabilities(0.7, 0.0, 0.0);
    EXPECT_EQ(n1, 1.0);
    EXPECT_EQ(n2, 0.0);
    for (double a : {0.2, kAlpha, 1.5, 2.7}) {
        EXPECT_NEAR(branch_probabilities(a, kGamma2, kGamma2).first, 0.586824089, 1e-9);
    }
    EXPECT_NEAR(branch_probabilities(kAlpha, 0.0, kGamma2).first, 0.971113715, 1e-9);
}

TEST(ApplyCmipSignal, LimitCases) {
    const auto s = prepare_two_photon({kAlpha, 0.3});
    const auto input = *postselect(s, labels::kSignalPath, "1").state;

    const auto none = apply_cmip_signal(s, 0.0, 0.0);
    EXPECT_NEAR(none.n1, 1.0, 1e-15);
    EXPECT_FALSE(none.phi2.has_value());
    EXPECT_NEAR(std::abs(none.phi1->inner(input)), 1.0, 1e-12);

    const auto full = apply_cmip_signal(s, kPi / 4, kPi / 4);
    EXPECT_NEAR(full.n2, 1.0, 1e-12);
    EXPECT_FALSE(full.phi1.has_value());
    EXPECT_FALSE(full.e1.has_value());
    // The second port returns the pair with the signal polarization flipped.
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const auto flipped = apply_local(Operator::unitary(ModeBasis({Factor::polarization(labels::kSignalPol)}), x), input);
    EXPECT_NEAR(std::abs(full.phi2->inner(flipped)), 1.0, 1e-12);
    EXPECT_NEAR(*full.e2, 0.51, 1e-12);
}

TEST(ApplyCmipSignal, MatchesHandBuiltBranch) {
    for (double g1 : {0.0, 0.2, 0.5, 0.7}) {
        for (double g2 : {0.1, kGamma2, 0.6}) {
            const auto br = apply_cmip_signal(prepare_two_photon({kAlpha, 0.9}), g1, g2);
            const auto hand = hand_branch1(kAlpha, 0.9, g1, g2);
            EXPECT_NEAR(std::abs(br.phi1->inner(hand)), 1.0, 1e-12);
            EXPECT_NEAR(br.n1 + br.n2, 1.0, 1e-12);
        }
    }
}

TEST(ApplyCmipSignal, MaximalAtSolvedPlate) {
    const double g1 = *solve_max_entanglement(kAlpha, kGamma2, 1);
    EXPECT_NEAR(g1, 0.679598026, 1e-9);
    EXPECT_NEAR(g1 / kPi, 0.21632277, 1e-8);
    const auto br = apply_cmip_signal(prepare_two_photon({kAlpha, 0.0}), g1, kGamma2);
    EXPECT_NEAR(*br.e1, 1.0, 1e-9);
    EXPECT_NEAR(br.n1, 0.0820530298, 1e-9);
    EXPECT_NEAR(concurrence(hand_branch1(kAlpha, 0.0, g1, kGamma2)), 1.0, 1e-9);
}

TEST(OutputEntanglement, Examples) {
    for (double g : {0.1, 0.3, 0.7}) {
        const auto o = output_entanglement(0.51, g, g, kAlpha);
        EXPECT_NEAR(*o.e1, 0.51, 1e-12);
        EXPECT_NEAR(*o.e2, 0.51, 1e-12);
    }
    for (double g1 : {0.0, 0.4}) {
        const auto z = output_entanglement(0.0, g1, 0.2, 0.0);
        EXPECT_EQ(*z.e1, 0.0);
        EXPECT_EQ(*z.e2, 0.0);
    }
    const double upper = 0.5 * std::acos(std::cos(2 * kGamma2) * (1 - std::cos(kAlpha)) / (1 + std::cos(kAlpha)));
    EXPECT_NEAR(upper, 0.756591213, 1e-9);
    EXPECT_NEAR(upper / kPi, 0.24083, 1e-5);
    EXPECT_NEAR(*output_entanglement(0.51, upper, kGamma2, kAlpha).e1, 0.51, 1e-12);
    EXPECT_NEAR(*output_entanglement(0.51, 0.24083 * kPi, kGamma2, kAlpha).e1, 0.51, 1e-4);
    EXPECT_NEAR(*output_entanglement(0.51, 0.2 * kPi, kGamma2, kAlpha).e1, 0.929804220, 1e-9);
    EXPECT_NEAR(*output_entanglement(0.51, 0.05, kGamma2, kAlpha).e1, 0.404151774, 1e-9);
    EXPECT_THROW(output_entanglement(0.6, 0.1, 0.1, kAlpha), InvalidArgument);
}

TEST(ConcentrationPredicate, Examples) {
    EXPECT_TRUE(concentration_predicate(kAlpha, 0.3, 0.3));
    EXPECT_TRUE(concentration_predicate(0.5351, 0.2 * kPi, kGamma2));
    EXPECT_FALSE(concentration_predicate(0.5351, 0.05, kGamma2));
    EXPECT_TRUE(concentration_predicate(kAlpha, 0.75, kGamma2));
    EXPECT_FALSE(concentration_predicate(kAlpha, 0.77, kGamma2));
}

TEST(ConcentrationPredicate, AgreesWithDirectComparison) {
    int mismatches = 0;
    for (int i = 0; i < 20; ++i) {
        const double a = kPi * (i + 1) / 21;
        for (int j = 0; j < 20; ++j) {
            for (int k = 0; k < 20; ++k) {
                const double g1 = kPi / 4 * j / 19;
                const double g2 = kPi / 4 * k / 19;
                const auto e = output_entanglement(std::sin(a), g1, g2, a).e1;
                if (e && concentration_predicate(a, g1, g2) != (*e >= std::sin(a) - 1e-12)) {
                    ++mismatches;
                }
            }
        }
    }
    EXPECT_EQ(mismatches, 0);
}

TEST(SolveMaxEntanglement, Examples) {
    // At g2 = 0 the solver evaluates acos near 1, where rounding in
    // tan(pi/4) is amplified to ~1e-8.
    EXPECT_NEAR(*solve_max_entanglement(kPi / 2, 0.0, 1), 0.0, 2e-8);
    for (double g2 : {0.2, 0.6}) {
        EXPECT_NEAR(*solve_max_entanglement(kPi / 2, g2, 1), g2, 1e-12);
    }
    EXPECT_NEAR(std::cos(2 * *solve_max_entanglement(0.5351, kGamma2, 1)), 0.209989834, 1e-9);
    EXPECT_NEAR(*solve_max_entanglement(0.5351, kGamma2, 1), 0.679615882, 1e-9);

    const double g1 = *solve_max_entanglement(kAlpha, kGamma2, 2);
    EXPECT_NEAR(std::pow(std::sin(2 * g1), 2), 0.0310576090, 1e-9);
    EXPECT_NEAR(g1, 0.0885784519, 1e-9);
    const auto br = apply_cmip_signal(prepare_two_photon({kAlpha, 0.0}), g1, kGamma2);
    EXPECT_NEAR(*br.e2, 1.0, 1e-9);
}

TEST(SolveMaxEntanglement, NoSolutionAndErrors) {
    // alpha > pi/2 with a small plate angle leaves tan(a/2) cos(2 g2) > 1.
    EXPECT_FALSE(solve_max_entanglement(2.5, 0.05, 1).has_value());
    EXPECT_THROW(solve_max_entanglement(0.0, 0.1, 1), InvalidArgument);
    EXPECT_THROW(solve_max_entanglement(kPi, 0.1, 1), InvalidArgument);
    EXPECT_THROW(solve_max_entanglement(1.0, 0.1, 3), InvalidArgument);
}

TEST(SolveMaxEntanglement, TradeOffIdentity) {
    for (double a : {0.3, kAlpha, 1.0, 1.4}) {
        for (double g2 : {0.0, 0.2, kGamma2, 0.5}) {
            const auto g1 = solve_max_entanglement(a, g2, 1);
            ASSERT_TRUE(g1.has_value());
            const double s = std::sin(a / 2);
            const double c = std::cos(2 * g2);
            EXPECT_NEAR(branch_probabilities(a, *g1, g2).first, 2 * s * s * c * c, 1e-9);
        }
    }
}

TEST(DeltaNeutrality, AllOutputs) {
    const auto ref = apply_cmip_signal(prepare_two_photon({kAlpha, 0.0}), 0.4, kGamma2);
    for (int d = 1; d < 16; ++d) {
        const auto br = apply_cmip_signal(prepare_two_photon({kAlpha, 2 * kPi * d / 16}), 0.4, kGamma2);
        EXPECT_NEAR(br.n1, ref.n1, 1e-12);
        EXPECT_NEAR(br.n2, ref.n2, 1e-12);
        EXPECT_NEAR(*br.e1, *ref.e1, 1e-12);
        EXPECT_NEAR(*br.e2, *ref.e2, 1e-12);
    }
}

}  // namespace cmip
