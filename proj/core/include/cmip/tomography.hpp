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

// Simulated polarization tomography over the six-projector catalog
// {H, V, D, A, R, L} per qubit, with linear least-squares inversion and
// eigenvalue-clipping repair.

#ifndef CMIP_TOMOGRAPHY_HPP
#define CMIP_TOMOGRAPHY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmip/qcore.hpp"

namespace cmip {

struct MeasurementSetting {
    std::string labels;  // one of "HVDARL" per qubit, first factor first
    Operator projector;
};

/// 6 settings for a one-qubit basis, 36 products for a two-qubit basis.
std::vector<MeasurementSetting> projector_catalog(const ModeBasis& basis);
/// Catalog on polarization_basis() (n = 1) or polarization_pair_basis() (n = 2).
std::vector<MeasurementSetting> projector_catalog(int n_qubits);

/// Real design matrix of `catalog` against the Pauli-product operator basis.
Eigen::MatrixXd design_matrix(const std::vector<MeasurementSetting>& catalog);

struct SettingCount {
    std::string setting;
    std::uint64_t count = 0;  // 0 in exact mode
    double frequency = 0.0;
};

struct CountsTable {
    ModeBasis basis;
    std::vector<SettingCount> entries;  // catalog order
    /// Empty for the exact-probability mode.
    std::optional<std::uint64_t> shots_per_setting;
    std::uint64_t seed = 0;

    bool exact() const { return !shots_per_setting.has_value(); }
};

/// Binomial counts per setting from tr(rho P). Setting k draws from the
/// stream derive_seed(seed, k). An empty `shots_per_setting` returns the
/// exact probabilities as frequencies.
CountsTable simulate_counts(const DensityMatrix& rho, std::optional<std::uint64_t> shots_per_setting,
                            std::uint64_t seed);

struct TomoReport {
    DensityMatrix rho_hat;
    std::optional<double> fidelity_vs_target;
    std::optional<double> concurrence;  // two-qubit bases only
    /// RMS of least-squares fitted minus observed frequencies.
    double residual = 0.0;
    /// Hermitian least-squares estimate before positivity repair.
    CMatrix linear_estimate;
};

/// Throws RankDeficientError when the settings do not span the operator space.
TomoReport reconstruct(const CountsTable& counts, const std::optional<StateVector>& target = {});

}  // namespace cmip

#endif  // CMIP_TOMOGRAPHY_HPP
