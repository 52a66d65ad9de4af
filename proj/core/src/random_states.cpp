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

#include "cmip/random_states.hpp"

#include <Eigen/QR>

#include "cmip/errors.hpp"

namespace cmip {

namespace {

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, CounterRng& rng) {
    CMatrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            g(i, j) = complex(rng.normal(), rng.normal());
        }
    }
    return g;
}

}  // namespace

StateVector random_state(const ModeBasis& basis, CounterRng& rng) {
    CVector v = ginibre(static_cast<Eigen::Index>(basis.dimension()), 1, rng).col(0);
    v.normalize();
    return StateVector(basis, std::move(v));
}

Operator random_unitary(const ModeBasis& basis, CounterRng& rng) {
    const auto d = static_cast<Eigen::Index>(basis.dimension());
    Eigen::HouseholderQR<CMatrix> qr(ginibre(d, d, rng));
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phases of R's diagonal so Q is Haar distributed.
    for (Eigen::Index j = 0; j < d; ++j) {
        const complex rjj = r(j, j);
        if (std::abs(rjj) > 0.0) {
            q.col(j) *= rjj / std::abs(rjj);
        }
    }
    return Operator::unitary(basis, std::move(q));
}

DensityMatrix random_density(const ModeBasis& basis, std::size_t rank, CounterRng& rng) {
    if (rank == 0 || rank > basis.dimension()) {
        throw InvalidArgument("random_density rank must lie in [1, dimension]");
    }
    const CMatrix g =
        ginibre(static_cast<Eigen::Index>(basis.dimension()), static_cast<Eigen::Index>(rank), rng);
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(basis, 0.5 * (m + m.adjoint()));
}

}  // namespace cmip
