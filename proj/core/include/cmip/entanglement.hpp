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

// Entanglement concentration and dilution: the signal photon of
// cos(a/2)|HH> + e^{id} sin(a/2)|VV> goes through the device with both
// plates rotated, and each output path is filtered separately.

#ifndef CMIP_ENTANGLEMENT_HPP
#define CMIP_ENTANGLEMENT_HPP

#include <optional>
#include <utility>

#include "cmip/qcore.hpp"

namespace cmip {

struct TwoPhotonConfig {
    double alpha = 0.0;
    double delta = 0.0;

    /// Principal branch alpha = arcsin(E), E in [0, 1].
    static TwoPhotonConfig from_entanglement(double e, double delta = 0.0);
    double entanglement() const;
};

struct EntangledBranches {
    std::optional<StateVector> phi1;  // signal_pol x idler_pol after path-1 filtering
    double n1 = 0.0;
    std::optional<double> e1;
    std::optional<StateVector> phi2;
    double n2 = 0.0;
    std::optional<double> e2;
};

/// Branches below this probability are reported empty.
inline constexpr double kEmptyBranch = 1e-12;

/// Normalized state on (signal_pol, signal_path = 1, idler_pol).
StateVector prepare_two_photon(const TwoPhotonConfig& cfg);

/// N1 = cos^2(a/2) cos^2(2g1) + sin^2(a/2) cos^2(2g2), N2 = 1 - N1.
std::pair<double, double> branch_probabilities(double alpha, double gamma1, double gamma2);

/// Evolves the signal photon through the device and filters each path.
EntangledBranches apply_cmip_signal(const StateVector& state, double gamma1, double gamma2);

struct OutputEntanglement {
    std::optional<double> e1;  // empty when N1 vanishes
    std::optional<double> e2;
};

/// E1 = E |cos 2g1 cos 2g2| / N1, E2 = E |sin 2g1 sin 2g2| / N2.
/// Throws InvalidArgument unless |e_in - |sin alpha|| <= 1e-9.
OutputEntanglement output_entanglement(double e_in, double gamma1, double gamma2, double alpha);

/// True when the path-1 output is at least as entangled as the input:
/// (cos 2g1 - cos 2g2)^2 - cos(a) (cos^2 2g2 - cos^2 2g1) <= 0.
bool concentration_predicate(double alpha, double gamma1, double gamma2);

/// gamma1 in [0, pi/4] making path `branch` (1 or 2) maximally entangled,
/// or nothing when no plate angle reaches it.
std::optional<double> solve_max_entanglement(double alpha, double gamma2, int branch);

}  // namespace cmip

#endif  // CMIP_ENTANGLEMENT_HPP
