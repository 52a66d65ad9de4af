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

#include "cmip/tomography.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "cmip/errors.hpp"
#include "cmip/rng.hpp"

namespace cmip {

namespace {

constexpr std::string_view kLabels = "HVDARL";
constexpr double kRankThreshold = 1e-10;

CVector qubit_ket(char label) {
    const double r = 1.0 / std::numbers::sqrt2;
    CVector v(2);
    switch (label) {
        case 'H': v << 1.0, 0.0; break;
        case 'V': v << 0.0, 1.0; break;
        case 'D': v << r, r; break;
        case 'A': v << r, -r; break;
        case 'R': v << r, complex(0.0, r); break;
        case 'L': v << r, complex(0.0, -r); break;
        default: throw InvalidArgument(std::string("unknown projector label ") + label);
    }
    return v;
}

CMatrix pauli(int k) {
    CMatrix p(2, 2);
    switch (k) {
        case 0: p << 1.0, 0.0, 0.0, 1.0; break;
        case 1: p << 0.0, 1.0, 1.0, 0.0; break;
        case 2: p << 0.0, complex(0.0, -1.0), complex(0.0, 1.0), 0.0; break;
        default: p << 1.0, 0.0, 0.0, -1.0; break;
    }
    return p;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::size_t qubit_count(const ModeBasis& basis) {
    const auto& f = basis.factors();
    if (f.empty() || f.size() > 2 ||
        std::any_of(f.begin(), f.end(), [](const Factor& x) { return x.dimension() != 2; })) {
        throw BasisError("tomography supports one or two qubit factors");
    }
    return f.size();
}

/// Pauli products sigma_{k_1} x ... in lexicographic order of (k_1, ...).
std::vector<CMatrix> pauli_products(std::size_t n_qubits) {
    std::vector<CMatrix> out;
    if (n_qubits == 1) {
        for (int k = 0; k < 4; ++k) {
            out.push_back(pauli(k));
        }
    } else {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                out.push_back(kron(pauli(a), pauli(b)));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<MeasurementSetting> projector_catalog(const ModeBasis& basis) {
    const auto n = qubit_count(basis);
    std::vector<MeasurementSetting> out;
    if (n == 1) {
        for (char a : kLabels) {
            const CVector v = qubit_ket(a);
            out.push_back({std::string(1, a), Operator(basis, v * v.adjoint())});
        }
    } else {
        for (char a : kLabels) {
            for (char b : kLabels) {
                CVector v(4);
                const CVector va = qubit_ket(a);
                const CVector vb = qubit_ket(b);
                for (Eigen::Index i = 0; i < 2; ++i) {
                    v.segment(2 * i, 2) = va[i] * vb;
                }
                out.push_back({std::string{a, b}, Operator(basis, v * v.adjoint())});
            }
        }
    }
    return out;
}

std::vector<MeasurementSetting> projector_catalog(int n_qubits) {
    switch (n_qubits) {
        case 1: return projector_catalog(polarization_basis());
        case 2: return projector_catalog(polarization_pair_basis());
        default: throw InvalidArgument("projector_catalog supports 1 or 2 qubits");
    }
}

Eigen::MatrixXd design_matrix(const std::vector<MeasurementSetting>& catalog) {
    if (catalog.empty()) {
        throw InvalidArgument("empty measurement catalog");
    }
    const auto& basis = catalog.front().projector.basis();
    const auto paulis = pauli_products(qubit_count(basis));
    const double d = static_cast<double>(basis.dimension());
    Eigen::MatrixXd a(static_cast<Eigen::Index>(catalog.size()),
                      static_cast<Eigen::Index>(paulis.size()));
    for (std::size_t s = 0; s < catalog.size(); ++s) {
        for (std::size_t k = 0; k < paulis.size(); ++k) {
            a(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(k)) =
                (catalog[s].projector.matrix() * paulis[k]).trace().real() / d;
        }
    }
    return a;
}

CountsTable simulate_counts(const DensityMatrix& rho, std::optional<std::uint64_t> shots_per_setting,
                            std::uint64_t seed) {
    if (shots_per_setting && *shots_per_setting == 0) {
        throw InvalidArgument("simulate_counts needs at least one shot per setting");
    }
    const auto catalog = projector_catalog(rho.basis());
    CountsTable table;
    table.basis = rho.basis();
    table.shots_per_setting = shots_per_setting;
    table.seed = seed;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        const double p =
            std::clamp((rho.matrix() * catalog[k].projector.matrix()).trace().real(), 0.0, 1.0);
        SettingCount entry{catalog[k].labels, 0, p};
        if (shots_per_setting) {
            CounterRng rng(derive_seed(seed, k));
            std::uint64_t hits = 0;
            for (std::uint64_t i = 0; i < *shots_per_setting; ++i) {
                hits += rng.bernoulli(p) ? 1 : 0;
            }
            entry.count = hits;
            entry.frequency = static_cast<double>(hits) / static_cast<double>(*shots_per_setting);
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

TomoReport reconstruct(const CountsTable& counts, const std::optional<StateVector>& target) {
    const auto n_qubits = qubit_count(counts.basis);
    const auto catalog = projector_catalog(counts.basis);
    if (counts.entries.size() != catalog.size()) {
        throw RankDeficientError("counts do not cover the full projector catalog");
    }
    Eigen::VectorXd f(static_cast<Eigen::Index>(catalog.size()));
    for (std::size_t s = 0; s < catalog.size(); ++s) {
        if (counts.entries[s].setting != catalog[s].labels) {
            throw InvalidArgument("counts table is not in catalog order at setting " +
                                  counts.entries[s].setting);
        }
        f[static_cast<Eigen::Index>(s)] = counts.entries[s].frequency;
    }

    const Eigen::MatrixXd a = design_matrix(catalog);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const auto rank = (sv.array() > kRankThreshold * sv[0]).count();
    if (rank != a.cols()) {
        throw RankDeficientError("tomography design matrix has rank " + std::to_string(rank));
    }
    const Eigen::VectorXd r = svd.solve(f);

    const auto paulis = pauli_products(n_qubits);
    const auto d = static_cast<Eigen::Index>(counts.basis.dimension());
    CMatrix estimate = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < paulis.size(); ++k) {
        estimate += r[static_cast<Eigen::Index>(k)] * paulis[k];
    }
    estimate /= static_cast<double>(d);
    estimate = 0.5 * (estimate + estimate.adjoint());

    const Eigen::VectorXd fit_error = a * r - f;
    TomoReport report{DensityMatrix::repaired(counts.basis, estimate), std::nullopt, std::nullopt,
                      std::sqrt(fit_error.squaredNorm() / static_cast<double>(f.size())),
                      estimate};
    if (target) {
        report.fidelity_vs_target = fidelity(report.rho_hat, *target);
    }
    if (n_qubits == 2) {
        report.concurrence = concurrence(report.rho_hat);
    }
    return report;
}

}  // namespace cmip
