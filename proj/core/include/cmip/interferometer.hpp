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

// Polarizing Mach-Zehnder device that conclusively changes the inner angle
// of the pair cos(a/2)|H> +- sin(a/2)|V> to a target angle b.
//
// Path 1 is the success port. With a <= b ("expand") the plate in the H arm
// rotates H1 towards V2; with b <= a ("contract") the plate in the V arm
// rotates V1 towards H2.

#ifndef CMIP_INTERFEROMETER_HPP
#define CMIP_INTERFEROMETER_HPP

#include <cstdint>
#include <optional>

#include "cmip/qcore.hpp"

namespace cmip {

enum class Branch { Expand, Contract };
enum class Sign { Plus, Minus };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

/// cos(angle/2)|H> +- sin(angle/2)|V> on the single-photon polarization basis.
StateVector polarization_pair_state(double angle, Sign sign);
/// Same amplitudes injected on path 1 of the signal basis.
StateVector input_state(double alpha, Sign sign);

/// Plate angle gamma1 for a <= b: cos(2 gamma1) = tan(a/2) / tan(b/2).
/// Throws WrongBranchError when b < a.
double solve_gamma1(double alpha, double beta);

/// Contraction setting for b <= a.
struct ContractSetting {
    /// cos(2 gamma2) = tan(b/2) / tan(a/2), the positive-cosine form used
    /// by the device matrix.
    double c2 = 1.0;

    double gamma2() const;
    /// Signed plate angle with the fast axis horizontal at zero, i.e.
    /// -(1/2) arccos(-c2).
    double hardware_angle() const;
};

/// Throws WrongBranchError when a < b.
ContractSetting solve_gamma2(double alpha, double beta);

struct CmipPlan {
    double alpha = 0.0;
    double beta = 0.0;
    Branch branch = Branch::Expand;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double phi = 0.0;
    double phi_prime = 0.0;

    /// Solved plan for (alpha, beta); Expand when alpha <= beta.
    static CmipPlan solve(double alpha, double beta);

    /// Throws InvalidArgument when the branch/angle invariants fail.
    void validate() const;
};

/// Both plates set independently:
///   H1 -> e^{i phi'} (cos 2g1 H1 + sin 2g1 V2)
///   V1 -> e^{i phi}  (cos 2g2 V1 + sin 2g2 H2)
/// with the path-2 inputs completed as V2 -> e^{i phi'}(-sin 2g1 H1 + cos 2g1 V2)
/// and H2 -> e^{i phi}(-sin 2g2 V1 + cos 2g2 H2).
Operator device_unitary(double gamma1, double gamma2, double phi = 0.0, double phi_prime = 0.0);

Operator build_unitary(const CmipPlan& plan);

struct BranchOutcome {
    std::optional<StateVector> success_state;  // path 1, renormalized
    double p_success = 0.0;
    std::optional<StateVector> failure_state;  // path 2, renormalized
    double p_failure = 0.0;
};

/// Evolves the input of the given sign through the plan's device and
/// splits on the path. Throws InvalidArgument when the plan's plate angles
/// differ from the solver's by more than 1e-9.
BranchOutcome run_cmip(Sign input_sign, const CmipPlan& plan);

/// sin^2(a/2)/sin^2(b/2) for a <= b, cos^2(a/2)/cos^2(b/2) for b <= a.
double closed_form_probability(double alpha, double beta);

struct RunCounts {
    std::uint64_t shots = 0;
    std::uint64_t success = 0;
    std::uint64_t failure = 0;
    std::uint64_t seed = 0;
};

/// Shots per independent seed-derived stream.
inline constexpr std::uint64_t kShotsPerChunk = 1u << 16;

/// Heralded Monte Carlo of `shots` photons. Chunk k of kShotsPerChunk
/// shots draws from the stream derive_seed(seed, k); `workers` only
/// changes scheduling, never the counts.
RunCounts sample_runs(Sign input_sign, const CmipPlan& plan, std::uint64_t shots,
                      std::uint64_t seed, unsigned workers = 1);

}  // namespace cmip

#endif  // CMIP_INTERFEROMETER_HPP
