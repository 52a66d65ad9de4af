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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cmip/errors.hpp"
#include "cmip/interferometer.hpp"

namespace cmip {

namespace {

constexpr double kPredicateTol = 1e-12;
constexpr double kConsistencyTol = 1e-9;

}  // namespace

TwoPhotonConfig TwoPhotonConfig::from_entanglement(double e, double delta) {
    if (!(e >= 0.0 && e <= 1.0)) {
        throw InvalidArgument("entanglement must lie in [0, 1]");
    }
    return {std::asin(e), delta};
}

double TwoPhotonConfig::entanglement() const {
    return std::abs(std::sin(alpha));
}

StateVector prepare_two_photon(const TwoPhotonConfig& cfg) {
    if (!(cfg.alpha >= 0.0 && cfg.alpha <= std::numbers::pi) || !std::isfinite(cfg.delta)) {
        throw InvalidArgument("two-photon alpha must lie in [0, pi]");
    }
    const auto b = two_photon_basis();
    const std::string hh[] = {"H", "1", "H"};
    const std::string vv[] = {"V", "1", "V"};
    CVector amps = CVector::Zero(8);
    amps[static_cast<Eigen::Index>(b.index_of_symbols(hh))] = std::cos(cfg.alpha / 2.0);
    amps[static_cast<Eigen::Index>(b.index_of_symbols(vv))] =
        std::polar(std::sin(cfg.alpha / 2.0), cfg.delta);
    return StateVector::normalized(b, std::move(amps));
}

std::pair<double, double> branch_probabilities(double alpha, double gamma1, double gamma2) {
    const double ca = std::cos(alpha / 2.0);
    const double sa = std::sin(alpha / 2.0);
    const double c1 = std::cos(2.0 * gamma1);
    const double c2 = std::cos(2.0 * gamma2);
    const double n1 = std::clamp(ca * ca * c1 * c1 + sa * sa * c2 * c2, 0.0, 1.0);
    return {n1, 1.0 - n1};
}

EntangledBranches apply_cmip_signal(const StateVector& state, double gamma1, double gamma2) {
    if (!(state.basis() == two_photon_basis())) {
        throw BasisError("apply_cmip_signal expects a (signal_pol, signal_path, idler_pol) state");
    }
    const StateVector out = apply_local(device_unitary(gamma1, gamma2), state);

    EntangledBranches br;
    const auto path1 = postselect(out, labels::kSignalPath, "1");
    const auto path2 = postselect(out, labels::kSignalPath, "2");
    br.n1 = path1.probability;
    br.n2 = path2.probability;
    if (path1.state && br.n1 >= kEmptyBranch) {
        br.phi1 = path1.state;
        br.e1 = concurrence(*path1.state);
    }
    if (path2.state && br.n2 >= kEmptyBranch) {
        br.phi2 = path2.state;
        br.e2 = concurrence(*path2.state);
    }
    return br;
}

OutputEntanglement output_entanglement(double e_in, double gamma1, double gamma2, double alpha) {
    if (std::abs(e_in - std::abs(std::sin(alpha))) > kConsistencyTol) {
        throw InvalidArgument("entanglement " + std::to_string(e_in) +
                              " is inconsistent with alpha " + std::to_string(alpha));
    }
    const auto [n1, n2] = branch_probabilities(alpha, gamma1, gamma2);
    const double c1 = std::cos(2.0 * gamma1);
    const double c2 = std::cos(2.0 * gamma2);
    const double s1 = std::sin(2.0 * gamma1);
    const double s2 = std::sin(2.0 * gamma2);

    OutputEntanglement out;
    if (n1 >= kEmptyBranch) {
        out.e1 = std::min(1.0, e_in * std::abs(c1 * c2) / n1);
    }
    if (n2 >= kEmptyBranch) {
        out.e2 = std::min(1.0, e_in * std::abs(s1 * s2) / n2);
    }
    return out;
}

bool concentration_predicate(double alpha, double gamma1, double gamma2) {
    const double c1 = std::cos(2.0 * gamma1);
    const double c2 = std::cos(2.0 * gamma2);
    const double d = c1 - c2;
    return d * d - std::cos(alpha) * (c2 * c2 - c1 * c1) <= kPredicateTol;
}

std::optional<double> solve_max_entanglement(double alpha, double gamma2, int branch) {
    if (!(alpha > 0.0 && alpha < std::numbers::pi)) {
        throw InvalidArgument("solve_max_entanglement needs alpha in (0, pi)");
    }
    if (branch != 1 && branch != 2) {
        throw InvalidArgument("branch must be 1 or 2");
    }
    const double t = std::tan(alpha / 2.0);
    double gamma1 = 0.0;
    if (branch == 1) {
        const double x = t * std::abs(std::cos(2.0 * gamma2));
        if (x > 1.0 + 1e-15) {
            return std::nullopt;
        }
        gamma1 = 0.5 * std::acos(std::min(x, 1.0));
    } else {
        const double y = t * std::abs(std::sin(2.0 * gamma2));
        if (y > 1.0 + 1e-15) {
            return std::nullopt;
        }
        gamma1 = 0.5 * std::asin(std::min(y, 1.0));
    }
    const auto [n1, n2] = branch_probabilities(alpha, gamma1, gamma2);
    if ((branch == 1 ? n1 : n2) < kEmptyBranch) {
        return std::nullopt;
    }
    return gamma1;
}

}  // namespace cmip
