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

#include "cmip/qcore.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "cmip/errors.hpp"

namespace cmip {

namespace {

constexpr double kNormRepairWindow = 1e-9;
constexpr double kUnitaryTol = 1e-12;
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPositivityTol = 1e-8;

void require_dimension(const ModeBasis& basis, Eigen::Index n, const char* what) {
    if (static_cast<Eigen::Index>(basis.dimension()) != n) {
        throw BasisError(std::string(what) + ": size does not match basis dimension");
    }
}

void require_same_basis(const ModeBasis& a, const ModeBasis& b, const char* what) {
    if (!(a == b)) {
        throw BasisError(std::string(what) + ": basis mismatch");
    }
}

void require_normalized(const StateVector& s, const char* what) {
    if (std::abs(s.norm() - 1.0) > kNormRepairWindow) {
        throw NormalizationError(std::string(what) + ": state is not normalized");
    }
}

}  // namespace

StateVector::StateVector(ModeBasis basis, CVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    require_dimension(basis_, amplitudes_.size(), "StateVector");
}

StateVector StateVector::normalized(ModeBasis basis, CVector amplitudes) {
    const double n = amplitudes.norm();
    if (!(std::abs(n - 1.0) <= kNormRepairWindow)) {
        throw NormalizationError("state norm " + std::to_string(n) +
                                 " is outside the repair window around 1");
    }
    amplitudes /= n;
    return StateVector(std::move(basis), std::move(amplitudes));
}

StateVector StateVector::basis_state(ModeBasis basis, std::span<const std::string> symbols) {
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
    amps[static_cast<Eigen::Index>(basis.index_of_symbols(symbols))] = 1.0;
    return StateVector(std::move(basis), std::move(amps));
}

complex StateVector::inner(const StateVector& other) const {
    require_same_basis(basis_, other.basis_, "inner");
    return amplitudes_.dot(other.amplitudes_);
}

StateVector StateVector::relabeled(ModeBasis basis) const {
    return StateVector(std::move(basis), amplitudes_);
}

Operator::Operator(ModeBasis basis, CMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw InvalidArgument("Operator: matrix is not square");
    }
    require_dimension(basis_, matrix_.rows(), "Operator");
}

Operator Operator::unitary(ModeBasis basis, CMatrix matrix) {
    Operator op(std::move(basis), std::move(matrix));
    const auto n = op.matrix_.rows();
    const double err = (op.matrix_.adjoint() * op.matrix_ - CMatrix::Identity(n, n))
                           .cwiseAbs()
                           .maxCoeff();
    if (err > kUnitaryTol) {
        throw InvalidArgument("Operator::unitary: U^dagger U deviates from identity by " +
                              std::to_string(err));
    }
    op.unitary_ = true;
    return op;
}

Operator Operator::identity(ModeBasis basis) {
    const auto n = static_cast<Eigen::Index>(basis.dimension());
    return unitary(std::move(basis), CMatrix::Identity(n, n));
}

DensityMatrix::DensityMatrix(ModeBasis basis, CMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw InvalidArgument("DensityMatrix: matrix is not square");
    }
    require_dimension(basis_, matrix_.rows(), "DensityMatrix");
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw NormalizationError("DensityMatrix: not Hermitian");
    }
    if (std::abs(matrix_.trace() - complex(1.0)) > kTraceTol) {
        throw NormalizationError("DensityMatrix: trace differs from 1");
    }
    matrix_ = 0.5 * (matrix_ + matrix_.adjoint());
    if (hermitian_eigen(matrix_).values.minCoeff() < -kPositivityTol) {
        throw NormalizationError("DensityMatrix: negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
    require_normalized(state, "DensityMatrix::pure");
    const CVector v = state.amplitudes() / state.norm();
    return DensityMatrix(state.basis(), v * v.adjoint());
}

DensityMatrix DensityMatrix::repaired(ModeBasis basis, const CMatrix& matrix) {
    auto eig = hermitian_eigen(matrix);
    Eigen::VectorXd clipped = eig.values.cwiseMax(0.0);
    const double total = clipped.sum();
    if (!(total > 0.0)) {
        throw NormalizationError("DensityMatrix::repaired: no positive spectrum left");
    }
    clipped /= total;
    CMatrix m = eig.vectors * clipped.cast<complex>().asDiagonal() * eig.vectors.adjoint();
    return DensityMatrix(std::move(basis), m);
}

DensityMatrix DensityMatrix::maximally_mixed(ModeBasis basis) {
    const auto n = static_cast<Eigen::Index>(basis.dimension());
    return DensityMatrix(std::move(basis), CMatrix::Identity(n, n) / static_cast<double>(n));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    ModeBasis basis = a.basis().concat(b.basis());
    const auto nb = b.amplitudes().size();
    CVector out(a.amplitudes().size() * nb);
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i) {
        out.segment(i * nb, nb) = a.amplitudes()[i] * b.amplitudes();
    }
    return StateVector(std::move(basis), std::move(out));
}

Operator kron(const Operator& a, const Operator& b) {
    ModeBasis basis = a.basis().concat(b.basis());
    const auto& ma = a.matrix();
    const auto& mb = b.matrix();
    CMatrix out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (Eigen::Index i = 0; i < ma.rows(); ++i) {
        for (Eigen::Index j = 0; j < ma.cols(); ++j) {
            out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) = ma(i, j) * mb;
        }
    }
    if (a.is_unitary() && b.is_unitary()) {
        return Operator::unitary(std::move(basis), std::move(out));
    }
    return Operator(std::move(basis), std::move(out));
}

StateVector apply(const Operator& op, const StateVector& state) {
    require_same_basis(op.basis(), state.basis(), "apply");
    return StateVector(state.basis(), op.matrix() * state.amplitudes());
}

StateVector apply_local(const Operator& op, const StateVector& state) {
    const auto& full = state.basis();
    const auto& sub = op.basis();
    std::vector<std::size_t> where(sub.size());
    for (std::size_t k = 0; k < sub.size(); ++k) {
        where[k] = full.require(sub.factors()[k].label);
        if (!(full.factors()[where[k]] == sub.factors()[k])) {
            throw BasisError("apply_local: factor '" + sub.factors()[k].label +
                             "' has different symbols");
        }
    }

    const auto& m = op.matrix();
    CVector out = CVector::Zero(state.amplitudes().size());
    std::vector<std::size_t> sub_digits(sub.size());
    for (std::size_t i = 0; i < full.dimension(); ++i) {
        auto digits = full.digits_of(i);
        for (std::size_t k = 0; k < sub.size(); ++k) {
            sub_digits[k] = digits[where[k]];
        }
        const auto row = static_cast<Eigen::Index>(sub.index_of(sub_digits));
        for (std::size_t col = 0; col < sub.dimension(); ++col) {
            const complex coeff = m(row, static_cast<Eigen::Index>(col));
            if (coeff == complex(0.0)) {
                continue;
            }
            auto col_digits = sub.digits_of(col);
            for (std::size_t k = 0; k < sub.size(); ++k) {
                digits[where[k]] = col_digits[k];
            }
            out[static_cast<Eigen::Index>(i)] +=
                coeff * state.amplitudes()[static_cast<Eigen::Index>(full.index_of(digits))];
        }
    }
    return StateVector(full, std::move(out));
}

DensityMatrix conjugate(const Operator& op, const DensityMatrix& rho) {
    require_same_basis(op.basis(), rho.basis(), "conjugate");
    return DensityMatrix(rho.basis(), op.matrix() * rho.matrix() * op.matrix().adjoint());
}

StateVector project(const StateVector& state, std::string_view factor, std::string_view symbol) {
    const auto& basis = state.basis();
    const auto pos = basis.require(factor);
    const auto& syms = basis.factors()[pos].symbols;
    auto it = std::find(syms.begin(), syms.end(), symbol);
    if (it == syms.end()) {
        throw BasisError("unknown symbol '" + std::string(symbol) + "' for factor '" +
                         std::string(factor) + "'");
    }
    const auto digit = static_cast<std::size_t>(it - syms.begin());

    ModeBasis rest = basis.without(factor);
    CVector out(static_cast<Eigen::Index>(rest.dimension()));
    for (std::size_t j = 0; j < rest.dimension(); ++j) {
        auto digits = rest.digits_of(j);
        digits.insert(digits.begin() + static_cast<std::ptrdiff_t>(pos), digit);
        out[static_cast<Eigen::Index>(j)] =
            state.amplitudes()[static_cast<Eigen::Index>(basis.index_of(digits))];
    }
    return StateVector(std::move(rest), std::move(out));
}

PostselectResult postselect(const StateVector& state, std::string_view factor,
                            std::string_view symbol) {
    require_normalized(state, "postselect");
    StateVector kept = project(state, factor, symbol);
    const double p = std::clamp(kept.squared_norm() / state.squared_norm(), 0.0, 1.0);
    PostselectResult result;
    result.probability = p;
    if (p >= kImpossibleOutcome) {
        result.state = StateVector(kept.basis(), kept.amplitudes() / kept.norm());
    }
    return result;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep) {
    const auto& basis = rho.basis();
    ModeBasis kept = basis.select(keep);
    std::vector<bool> is_kept(basis.size(), false);
    std::vector<Factor> traced_factors;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        is_kept[k] = kept.position(basis.factors()[k].label).has_value();
        if (!is_kept[k]) {
            traced_factors.push_back(basis.factors()[k]);
        }
    }
    ModeBasis traced(traced_factors);

    const auto nk = static_cast<Eigen::Index>(kept.dimension());
    CMatrix out = CMatrix::Zero(nk, nk);
    std::vector<std::size_t> kd(kept.size());
    std::vector<std::size_t> td(traced.size());
    auto split = [&](std::size_t index, std::vector<std::size_t>& kdig,
                     std::vector<std::size_t>& tdig) {
        auto digits = basis.digits_of(index);
        std::size_t ki = 0;
        std::size_t ti = 0;
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (is_kept[k]) {
                kdig[ki++] = digits[k];
            } else {
                tdig[ti++] = digits[k];
            }
        }
    };
    std::vector<std::size_t> kd2(kept.size());
    std::vector<std::size_t> td2(traced.size());
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        split(i, kd, td);
        for (std::size_t j = 0; j < basis.dimension(); ++j) {
            split(j, kd2, td2);
            if (td != td2) {
                continue;
            }
            out(static_cast<Eigen::Index>(kept.index_of(kd)),
                static_cast<Eigen::Index>(kept.index_of(kd2))) +=
                rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return DensityMatrix(std::move(kept), out);
}

double fidelity(const DensityMatrix& rho, const StateVector& target) {
    require_same_basis(rho.basis(), target.basis(), "fidelity");
    require_normalized(target, "fidelity");
    const CVector t = target.amplitudes() / target.norm();
    const double f = t.dot(rho.matrix() * t).real();
    return std::clamp(f, 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) {
    const auto& f = rho.basis().factors();
    if (rho.dimension() != 4 || f.size() != 2 || f[0].dimension() != 2 ||
        f[1].dimension() != 2) {
        throw BasisError("concurrence: expected a two-qubit density matrix");
    }
    // sigma_y (x) sigma_y in the computational basis.
    CMatrix yy = CMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;

    // The singular values of sqrt(rho) YY conj(sqrt(rho)) are the square
    // roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho).
    const CMatrix root = psd_sqrt(rho.matrix());
    const CMatrix a = root * yy * root.conjugate();
    Eigen::JacobiSVD<CMatrix> svd(a);
    const Eigen::VectorXd s = svd.singularValues();  // decreasing
    return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double concurrence(const StateVector& two_qubit_state) {
    return concurrence(DensityMatrix::pure(two_qubit_state));
}

}  // namespace cmip
